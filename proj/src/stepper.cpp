#include "posetenum/stepper.hpp"

#include <algorithm>

#include "posetenum/meter.hpp"

namespace posetenum {

namespace {

// Max over root-to-node paths of the summed per-node ticks, settled as
// nodes close.
class PathProbe : public Probe {
 public:
  explicit PathProbe(const Meter& m) : m_(m) {}

  void enter(std::span<const Element>) override { open_.push_back({m_.count(), 0, 0}); }

  void leave() override {
    const Open o = open_.back();
    open_.pop_back();
    const std::int64_t total = m_.count() - o.start;
    const std::int64_t down = total - o.child_ticks + o.max_child_down;
    if (open_.empty()) {
      max_ = std::max(max_, down);
    } else {
      open_.back().child_ticks += total;
      open_.back().max_child_down = std::max(open_.back().max_child_down, down);
    }
    settled(down);
  }

  std::int64_t max_path() const { return max_; }

 protected:
  virtual void settled(std::int64_t down) { (void)down; }

 private:
  struct Open {
    std::int64_t start;
    std::int64_t child_ticks;
    std::int64_t max_child_down;
  };
  const Meter& m_;
  std::vector<Open> open_;
  std::int64_t max_ = 0;
};

}  // namespace

std::int64_t default_delta_bound(const Poset& p, Kind kind) {
  (void)kind;
  const PosetStats s = compute_stats(p);
  return 2 * kDeltaK * (s.n + 1) * (s.n + s.q + 1);
}

std::int64_t measure_delta(const Poset& p, Kind kind) {
  Meter m;
  PathProbe probe(m);
  m.set_probe(&probe);
  enumerate(p, kind, Order::Gray, [](Cursor&) {}, &m);
  return probe.max_path();
}

std::int64_t queue_capacity(std::int64_t delta_bound, std::int64_t mu_tstar) {
  if (mu_tstar <= 0) throw std::invalid_argument("mu * T* must be positive");
  return std::max<std::int64_t>(1, (2 * delta_bound + mu_tstar - 1) / mu_tstar);
}

class LooplessStepper::Driver : public PathProbe {
 public:
  explicit Driver(LooplessStepper& s) : PathProbe(s.meter_), s_(s) {}

  void on_alarm() override { s_.yield(); }

 protected:
  void settled(std::int64_t down) override {
    if (down > s_.delta_bound_) throw DeltaBoundError();
  }

 private:
  LooplessStepper& s_;
};

LooplessStepper::LooplessStepper(Poset p, Kind kind, std::int64_t delta_bound,
                                 std::int64_t mu_tstar)
    : p_(std::move(p)),
      kind_(kind),
      delta_bound_(delta_bound > 0 ? delta_bound : default_delta_bound(p_, kind)),
      slice_(mu_tstar),
      capacity_(queue_capacity(delta_bound_, mu_tstar)),
      driver_(std::make_unique<Driver>(*this)),
      ring_(static_cast<std::size_t>(capacity_) + 1),
      target_(delta_bound_) {
  meter_.set_probe(driver_.get());
}

LooplessStepper::~LooplessStepper() {
  if (started_ && !finished_) {
    cancel_ = true;
    resume();
  }
  if (thread_.joinable()) thread_.join();
}

// Consumer side: hand control to the producer and wait until it yields back.
void LooplessStepper::resume() {
  to_producer_.release();
  to_consumer_.acquire();
}

// Producer side.
void LooplessStepper::yield() {
  to_consumer_.release();
  to_producer_.acquire();
  if (cancel_) throw StopEnumeration();
}

void LooplessStepper::produce() {
  to_producer_.acquire();
  try {
    if (!cancel_)
      enumerate(p_, kind_, Order::Gray, [this](Cursor& c) { push(c.take_delta()); }, &meter_);
  } catch (const StopEnumeration&) {
  } catch (...) {
    error_ = std::current_exception();
  }
  finished_ = true;
  to_consumer_.release();
}

void LooplessStepper::push(const Delta& d) {
  ring_[static_cast<std::size_t>((head_ + size_) % static_cast<std::int64_t>(ring_.size()))] = d;
  ++size_;
  max_occupancy_ = std::max(max_occupancy_, size_);
  if (size_ > capacity_) yield();
}

Delta LooplessStepper::pop() {
  const Delta d = ring_[static_cast<std::size_t>(head_)];
  head_ = (head_ + 1) % static_cast<std::int64_t>(ring_.size());
  --size_;
  ++emitted_;
  last_gap_ = meter_.count() - last_pop_tick_;
  last_pop_tick_ = meter_.count();
  return d;
}

std::optional<Delta> LooplessStepper::step() {
  if (!started_) {
    started_ = true;
    thread_ = std::thread([this] { produce(); });
  }
  if (!finished_ && size_ <= capacity_) {
    meter_.set_alarm(std::max(target_, meter_.count() + 1));
    resume();
    if (error_) std::rethrow_exception(error_);
  }
  if (size_ > capacity_) return pop();
  if (!finished_) {
    // The producer stopped at the scheduled tick.
    target_ = meter_.count() + slice_;
    if (size_ == 0) throw QueueUnderflow();
    return pop();
  }
  if (size_ > 0) return pop();
  return std::nullopt;
}

std::unique_ptr<LooplessStepper> make_stepper(const Poset& p, Kind kind,
                                              std::int64_t delta_bound,
                                              const std::optional<PotentialConstants>& c) {
  const PotentialConstants k = c ? *c : PotentialConstants::defaults(kind);
  return std::make_unique<LooplessStepper>(p, kind, delta_bound, k.mu * k.tstar);
}

}  // namespace posetenum
