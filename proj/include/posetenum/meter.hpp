#ifndef POSETENUM_METER_HPP
#define POSETENUM_METER_HPP

// Abstract instruction counter shared by the enumerators.
//
// One tick is charged per element comparison, per list insertion or removal,
// per loop-body execution, per visit and per recursion-node entry. Probes
// observe the recursion tree without changing what the enumerator does.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

#include "posetenum/poset.hpp"

namespace posetenum {

/// Thrown from a probe to end an enumeration early.
class StopEnumeration : public std::exception {
 public:
  const char* what() const noexcept override { return "enumeration stopped"; }
};

class Probe {
 public:
  virtual ~Probe() = default;
  /// A recursion node on `sub` starts (after its entry tick).
  virtual void enter(std::span<const Element> sub) { (void)sub; }
  virtual void leave() {}
  /// Asked before each recursive call; returning false skips the child.
  virtual bool may_descend(std::span<const Element> sub) {
    (void)sub;
    return true;
  }
  /// A child that was not descended into.
  virtual void skip(std::span<const Element> sub) { (void)sub; }
  /// Called right after a visit was emitted.
  virtual void visit() {}
  /// The tick counter reached the alarm threshold.
  virtual void on_alarm() {}
};

class Meter {
 public:
  static constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();

  explicit Meter(Probe* probe = nullptr) : probe_(probe) {}

  /// A bulk charge that crosses the alarm fires it at the exact crossing
  /// tick, then continues with whatever alarm the probe set.
  void tick(std::int64_t n = 1) {
    if (paused_) return;
    while (count_ + n >= alarm_) {
      n -= alarm_ - count_;
      count_ = alarm_;
      fire();
    }
    count_ += n;
  }
  std::int64_t count() const { return count_; }

  void set_alarm(std::int64_t at) { alarm_ = at; }
  std::int64_t alarm() const { return alarm_; }

  Probe* probe() const { return probe_; }
  void set_probe(Probe* p) { probe_ = p; }

  bool paused() const { return paused_; }

  // Probe forwarding; all no-ops without a probe.
  void enter(std::span<const Element> sub) {
    if (probe_) probe_->enter(sub);
  }
  void leave() {
    if (probe_) probe_->leave();
  }
  bool may_descend(std::span<const Element> sub) {
    return probe_ == nullptr || probe_->may_descend(sub);
  }
  void skip(std::span<const Element> sub) {
    if (probe_) probe_->skip(sub);
  }
  void visited() {
    if (probe_) probe_->visit();
  }

  /// Stops counting until destroyed; used for work that is simulated on
  /// behalf of a skipped child.
  class Pause {
   public:
    explicit Pause(Meter& m) : m_(m), was_(m.paused_) { m_.paused_ = true; }
    ~Pause() { m_.paused_ = was_; }
    Pause(const Pause&) = delete;
    Pause& operator=(const Pause&) = delete;

   private:
    Meter& m_;
    bool was_;
  };

 private:
  void fire() {
    alarm_ = kNever;
    if (probe_) probe_->on_alarm();
  }

  std::int64_t count_ = 0;
  std::int64_t alarm_ = kNever;
  Probe* probe_ = nullptr;
  bool paused_ = false;
};

}  // namespace posetenum

#endif  // POSETENUM_METER_HPP
