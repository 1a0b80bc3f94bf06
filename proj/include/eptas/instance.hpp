#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eptas/rational.hpp"

namespace eptas {

/// Unrelated machines grouped into K types. processing[t][j] is the time of
/// job j on any machine of type t; multiplicities[t] machines share type t.
class Instance {
 public:
  Instance() = default;
  /// Throws DimensionMismatch on ragged matrices or a multiplicity count that
  /// differs from the row count, std::invalid_argument on negative times,
  /// non-positive multiplicities, or K = 0.
  Instance(std::vector<std::vector<Rational>> processing, std::vector<int> multiplicities);

  [[nodiscard]] int num_types() const { return static_cast<int>(multiplicities_.size()); }
  [[nodiscard]] int num_jobs() const { return num_jobs_; }
  [[nodiscard]] int num_machines() const { return num_machines_; }
  [[nodiscard]] int multiplicity(int type) const { return multiplicities_[type]; }
  [[nodiscard]] const std::vector<int>& multiplicities() const { return multiplicities_; }
  [[nodiscard]] const Rational& time(int type, int job) const { return processing_[type][job]; }
  [[nodiscard]] const std::vector<std::vector<Rational>>& processing() const { return processing_; }

  /// Smallest time of `job` over all types.
  [[nodiscard]] const Rational& min_time(int job) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::vector<Rational>> processing_;
  std::vector<int> multiplicities_;
  int num_jobs_ = 0;
  int num_machines_ = 0;
};

struct MachineId {
  int type = 0;
  int index = 0;

  friend bool operator==(const MachineId&, const MachineId&) = default;
  friend auto operator<=>(const MachineId&, const MachineId&) = default;
};

struct Schedule {
  std::vector<MachineId> assignment;  // job -> machine

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Throws InvalidSchedule when the schedule does not cover exactly the
/// instance's jobs or names a machine outside its type's multiplicity.
void validate_schedule(const Instance& inst, const Schedule& sched);

/// Per-machine loads, indexed [type][index].
std::vector<std::vector<Rational>> machine_loads(const Instance& inst, const Schedule& sched);

Rational evaluate_makespan(const Instance& inst, const Schedule& sched);

/// Minimum over all machines, empty ones included.
Rational evaluate_min_load(const Instance& inst, const Schedule& sched);

// Text formats (JSON documents; rational literals are strings "p" or "p/q").
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);
Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& sched);

Instance read_instance_file(const std::string& path);
Schedule read_schedule_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// Integer times uniform in [1, p_max], drawn row by row (type-major) from a
/// 64-bit Mersenne Twister with portable rejection sampling, so a seed yields
/// the same instance on every platform.
Instance generate_instance(int num_types, int num_jobs, const std::vector<int>& multiplicities,
                           std::uint64_t p_max, std::uint64_t seed);

}  // namespace eptas
