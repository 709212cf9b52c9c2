#ifndef POSETENUM_STEPPER_HPP
#define POSETENUM_STEPPER_HPP

// Worst-case constant delay on top of the Gray enumerators: the enumerator
// runs ahead in tick-metered slices and its deltas are released from a
// bounded queue at a fixed rate.

#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <semaphore>
#include <stdexcept>
#include <thread>
#include <vector>

#include "posetenum/audit.hpp"
#include "posetenum/cursor.hpp"
#include "posetenum/enumerate.hpp"

namespace posetenum {

/// Calibrated so that every corpus run has max path ticks <= K (n+1)(n+q+1).
inline constexpr std::int64_t kDeltaK = 4;

/// 2 K (n+1)(n+q+1): the path bound with a safety factor of two.
std::int64_t default_delta_bound(const Poset& p, Kind kind);

/// Exact max root-to-node path ticks of the Gray run, by a dry run.
std::int64_t measure_delta(const Poset& p, Kind kind);

/// max(1, ceil(2 delta / (mu T*))).
std::int64_t queue_capacity(std::int64_t delta_bound, std::int64_t mu_tstar);

/// The producer path cost exceeded the configured bound.
class DeltaBoundError : public std::logic_error {
 public:
  DeltaBoundError() : std::logic_error("delta bound violated") {}
};

/// A scheduled output found the queue empty.
class QueueUnderflow : public std::logic_error {
 public:
  QueueUnderflow() : std::logic_error("queue empty at a scheduled pop") {}
};

class LooplessStepper {
 public:
  /// `delta_bound` <= 0 selects default_delta_bound().
  LooplessStepper(Poset p, Kind kind, std::int64_t delta_bound, std::int64_t mu_tstar);
  ~LooplessStepper();
  LooplessStepper(const LooplessStepper&) = delete;
  LooplessStepper& operator=(const LooplessStepper&) = delete;

  /// Next delta, or nullopt once the enumeration is exhausted. The first
  /// delta is the change from the empty set.
  std::optional<Delta> step();

  std::int64_t capacity() const { return capacity_; }
  std::int64_t delta_bound() const { return delta_bound_; }
  std::int64_t emitted() const { return emitted_; }
  std::int64_t max_occupancy() const { return max_occupancy_; }
  /// Producer ticks spent since the previous output, for the last output.
  std::int64_t last_gap() const { return last_gap_; }
  std::int64_t producer_ticks() const { return meter_.count(); }

 private:
  class Driver;
  void resume();
  void yield();
  void produce();
  void push(const Delta& d);
  Delta pop();

  Poset p_;
  Kind kind_;
  std::int64_t delta_bound_;
  std::int64_t slice_;
  std::int64_t capacity_;

  Meter meter_;
  std::unique_ptr<Driver> driver_;
  std::vector<Delta> ring_;
  std::int64_t head_ = 0;
  std::int64_t size_ = 0;
  std::int64_t max_occupancy_ = 0;

  std::int64_t target_;
  std::int64_t last_pop_tick_ = 0;
  std::int64_t last_gap_ = 0;
  std::int64_t emitted_ = 0;

  std::binary_semaphore to_producer_{0};
  std::binary_semaphore to_consumer_{0};
  bool started_ = false;
  bool finished_ = false;
  bool cancel_ = false;
  std::exception_ptr error_;
  std::thread thread_;
};

/// Uses mu and T* from `c`, or the defaults for `kind`.
std::unique_ptr<LooplessStepper> make_stepper(
    const Poset& p, Kind kind, std::int64_t delta_bound = 0,
    const std::optional<PotentialConstants>& c = std::nullopt);

}  // namespace posetenum

#endif  // POSETENUM_STEPPER_HPP
