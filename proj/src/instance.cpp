#include "eptas/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "eptas/errors.hpp"

namespace eptas {

using nlohmann::json;

Instance::Instance(std::vector<std::vector<Rational>> processing, std::vector<int> multiplicities)
    : processing_(std::move(processing)), multiplicities_(std::move(multiplicities)) {
  if (multiplicities_.empty()) throw std::invalid_argument("instance needs at least one machine type");
  if (processing_.size() != multiplicities_.size()) {
    throw DimensionMismatch("processing matrix has " + std::to_string(processing_.size()) +
                            " rows but there are " + std::to_string(multiplicities_.size()) +
                            " machine types");
  }
  num_jobs_ = static_cast<int>(processing_.front().size());
  for (std::size_t t = 0; t < processing_.size(); ++t) {
    if (static_cast<int>(processing_[t].size()) != num_jobs_) {
      throw DimensionMismatch("row " + std::to_string(t) + " has " +
                              std::to_string(processing_[t].size()) + " entries, expected " +
                              std::to_string(num_jobs_));
    }
    for (const auto& p : processing_[t]) {
      if (sgn(p) < 0) throw std::invalid_argument("negative processing time");
    }
    if (multiplicities_[t] < 1) throw std::invalid_argument("multiplicities must be positive");
    num_machines_ += multiplicities_[t];
  }
}

const Rational& Instance::min_time(int job) const {
  const Rational* best = &processing_[0][job];
  for (const auto& row : processing_) {
    if (row[job] < *best) best = &row[job];
  }
  return *best;
}

void validate_schedule(const Instance& inst, const Schedule& sched) {
  if (static_cast<int>(sched.assignment.size()) != inst.num_jobs()) {
    throw InvalidSchedule("schedule assigns " + std::to_string(sched.assignment.size()) +
                          " jobs, instance has " + std::to_string(inst.num_jobs()));
  }
  for (std::size_t j = 0; j < sched.assignment.size(); ++j) {
    const MachineId& m = sched.assignment[j];
    if (m.type < 0 || m.type >= inst.num_types() || m.index < 0 ||
        m.index >= inst.multiplicity(m.type)) {
      throw InvalidSchedule("job " + std::to_string(j) + " assigned to nonexistent machine (" +
                            std::to_string(m.type) + ", " + std::to_string(m.index) + ")");
    }
  }
}

std::vector<std::vector<Rational>> machine_loads(const Instance& inst, const Schedule& sched) {
  validate_schedule(inst, sched);
  std::vector<std::vector<Rational>> loads(inst.num_types());
  for (int t = 0; t < inst.num_types(); ++t) loads[t].assign(inst.multiplicity(t), Rational(0));
  for (int j = 0; j < inst.num_jobs(); ++j) {
    const MachineId& m = sched.assignment[j];
    loads[m.type][m.index] += inst.time(m.type, j);
  }
  return loads;
}

Rational evaluate_makespan(const Instance& inst, const Schedule& sched) {
  Rational best(0);
  for (const auto& row : machine_loads(inst, sched)) {
    for (const auto& load : row) best = std::max(best, load);
  }
  return best;
}

Rational evaluate_min_load(const Instance& inst, const Schedule& sched) {
  const auto loads = machine_loads(inst, sched);
  Rational best = loads[0][0];
  for (const auto& row : loads) {
    for (const auto& load : row) best = std::min(best, load);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), "", e.what());
  }
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(0, key, "missing field");
  }
  return doc.at(key);
}

long require_integer(const json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ParseError(0, field, "expected an integer");
  return value.get<long>();
}

Rational parse_time(const json& value, const std::string& field) {
  std::optional<Rational> r;
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (!s.empty() && s.front() == '-') throw ParseError(0, field, "processing times must not be negative");
    r = parse_rational(s);
  } else if (value.is_number_unsigned()) {
    r = Rational(value.get<unsigned long>());
  }
  if (!r) throw ParseError(0, field, "invalid rational literal " + value.dump());
  return *r;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  if (require_integer(require(doc, "version"), "version") != 1) {
    throw ParseError(0, "version", "unsupported version");
  }
  const long k = require_integer(require(doc, "k"), "k");
  const long n = require_integer(require(doc, "n"), "n");
  if (k < 1) throw ParseError(0, "k", "need at least one machine type");
  if (n < 0) throw ParseError(0, "n", "job count must be non-negative");

  const json& mults = require(doc, "multiplicities");
  if (!mults.is_array()) throw ParseError(0, "multiplicities", "expected an array");
  if (static_cast<long>(mults.size()) != k) {
    throw DimensionMismatch("multiplicities has " + std::to_string(mults.size()) +
                            " entries, k = " + std::to_string(k));
  }
  std::vector<int> multiplicities;
  for (std::size_t t = 0; t < mults.size(); ++t) {
    const std::string field = "multiplicities[" + std::to_string(t) + "]";
    const long m = require_integer(mults[t], field);
    if (m < 1) throw ParseError(0, field, "multiplicity must be positive");
    multiplicities.push_back(static_cast<int>(m));
  }

  const json& rows = require(doc, "processing");
  if (!rows.is_array()) throw ParseError(0, "processing", "expected an array of rows");
  if (static_cast<long>(rows.size()) != k) {
    throw DimensionMismatch("processing has " + std::to_string(rows.size()) +
                            " rows, k = " + std::to_string(k));
  }
  std::vector<std::vector<Rational>> processing(k);
  for (long t = 0; t < k; ++t) {
    const std::string row_field = "processing[" + std::to_string(t) + "]";
    if (!rows[t].is_array()) throw ParseError(0, row_field, "expected an array");
    if (static_cast<long>(rows[t].size()) != n) {
      throw DimensionMismatch(row_field + " has " + std::to_string(rows[t].size()) +
                              " entries, n = " + std::to_string(n));
    }
    for (long j = 0; j < n; ++j) {
      processing[t].push_back(parse_time(rows[t][j], row_field + "[" + std::to_string(j) + "]"));
    }
  }
  return Instance(std::move(processing), std::move(multiplicities));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n  \"version\": 1,\n  \"k\": " << inst.num_types() << ",\n  \"n\": " << inst.num_jobs()
      << ",\n  \"multiplicities\": [";
  for (int t = 0; t < inst.num_types(); ++t) out << (t ? ", " : "") << inst.multiplicity(t);
  out << "],\n  \"processing\": [";
  for (int t = 0; t < inst.num_types(); ++t) {
    out << (t ? ",\n    [" : "\n    [");
    for (int j = 0; j < inst.num_jobs(); ++j) {
      out << (j ? ", " : "") << '"' << to_string(inst.time(t, j)) << '"';
    }
    out << ']';
  }
  out << "\n  ]\n}\n";
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_array()) throw ParseError(0, "", "schedule must be an array of machine ids");
  Schedule sched;
  for (std::size_t j = 0; j < doc.size(); ++j) {
    const std::string field = "[" + std::to_string(j) + "]";
    const long t = require_integer(require(doc[j], "type"), field + ".type");
    const long i = require_integer(require(doc[j], "index"), field + ".index");
    sched.assignment.push_back({static_cast<int>(t), static_cast<int>(i)});
  }
  return sched;
}

std::string serialize_schedule(const Schedule& sched) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < sched.assignment.size(); ++j) {
    out << (j ? ",\n  " : "\n  ") << "{\"type\": " << sched.assignment[j].type
        << ", \"index\": " << sched.assignment[j].index << '}';
  }
  out << (sched.assignment.empty() ? "]\n" : "\n]\n");
  return out.str();
}

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

Schedule read_schedule_file(const std::string& path) { return parse_schedule(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

// ---------------------------------------------------------------------------
// Generation

namespace {

// std::uniform_int_distribution is implementation-defined; plain rejection
// sampling on the raw engine output is not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

Instance generate_instance(int num_types, int num_jobs, const std::vector<int>& multiplicities,
                           std::uint64_t p_max, std::uint64_t seed) {
  if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
  if (num_jobs < 0) throw std::invalid_argument("job count must be non-negative");
  if (static_cast<int>(multiplicities.size()) != num_types) {
    throw DimensionMismatch("need one multiplicity per machine type");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> processing(num_types);
  for (int t = 0; t < num_types; ++t) {
    for (int j = 0; j < num_jobs; ++j) {
      processing[t].emplace_back(static_cast<unsigned long>(1 + uniform_below(rng, p_max)));
    }
  }
  return Instance(std::move(processing), multiplicities);
}

}  // namespace eptas
