#pragma once

// Instance files (JSON) and seeded random instance generation.
//
// File layout:
//   {
//     "setup": 2,
//     "capacity": 2,                 // or "unbounded"
//     "jobs": [ {"id": 1, "p": 1, "cost": {"type": "lateness", "due": 3}}, ... ],
//     "precedence": [[1, 2], ...]    // optional
//   }
// Cost types: lateness{due}, tardiness{due}, weighted_completion{w},
// affine{a, c}, step{breakpoints: [[time, value], ...]}.

#include <cstdint>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbatch/model.hpp"

namespace sbatch {

/// Input error carrying a location: "line L, column C" for syntax errors or
/// a JSON pointer such as "/jobs/2/p" for content errors.
class ParseError : public InputError {
 public:
  ParseError(std::string where, const std::string& what)
      : InputError(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

namespace detail {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

inline const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path, std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<std::int64_t>();
}

inline CostSpec parse_cost(const json& c, const std::string& path) {
  const auto& type_node = require(c, "type", path);
  if (!type_node.is_string()) throw ParseError(path + "/type", "expected a string");
  const auto type = type_node.get<std::string>();
  auto field = [&](const char* key) { return as_int(require(c, key, path), path + "/" + key); };
  if (type == "lateness") return Lateness{field("due")};
  if (type == "tardiness") return Tardiness{field("due")};
  if (type == "weighted_completion") return WeightedCompletion{field("w")};
  if (type == "affine") return Affine{field("a"), field("c")};
  if (type == "step") {
    const auto& bps = require(c, "breakpoints", path);
    if (!bps.is_array()) throw ParseError(path + "/breakpoints", "expected an array");
    StepTable st;
    for (std::size_t k = 0; k < bps.size(); ++k) {
      const auto bp_path = path + "/breakpoints/" + std::to_string(k);
      if (!bps[k].is_array() || bps[k].size() != 2)
        throw ParseError(bp_path, "expected [time, value]");
      st.breakpoints.emplace_back(as_int(bps[k][0], bp_path + "/0"), as_int(bps[k][1], bp_path + "/1"));
    }
    return st;
  }
  throw ParseError(path + "/type", "unknown cost type \"" + type + "\"");
}

inline ojson emit_cost(const CostSpec& spec) {
  struct Visitor {
    ojson operator()(const Lateness& f) const { return {{"type", "lateness"}, {"due", f.due}}; }
    ojson operator()(const Tardiness& f) const { return {{"type", "tardiness"}, {"due", f.due}}; }
    ojson operator()(const WeightedCompletion& f) const {
      return {{"type", "weighted_completion"}, {"w", f.w}};
    }
    ojson operator()(const Affine& f) const { return {{"type", "affine"}, {"a", f.a}, {"c", f.c}}; }
    ojson operator()(const StepTable& f) const {
      ojson bps = ojson::array();
      for (auto [t, v] : f.breakpoints) bps.push_back({t, v});
      return {{"type", "step"}, {"breakpoints", bps}};
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Recover line/column from the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     "malformed JSON");
  }

  const Time setup = detail::as_int(detail::require(doc, "setup", ""), "/setup");

  Capacity capacity;
  const auto& cap = detail::require(doc, "capacity", "");
  if (cap.is_string()) {
    if (cap.get<std::string>() != "unbounded")
      throw ParseError("/capacity", "expected an integer or \"unbounded\"");
    capacity = Capacity::unbounded();
  } else {
    const auto b = detail::as_int(cap, "/capacity");
    if (b < 1) throw ParseError("/capacity", "batch capacity must be >= 1");
    capacity = Capacity::bounded(static_cast<int>(b));
  }

  const auto& jobs_node = detail::require(doc, "jobs", "");
  if (!jobs_node.is_array()) throw ParseError("/jobs", "expected an array");
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < jobs_node.size(); ++k) {
    const auto path = "/jobs/" + std::to_string(k);
    const auto& jn = jobs_node[k];
    Job job;
    job.id = static_cast<JobId>(detail::as_int(detail::require(jn, "id", path), path + "/id"));
    job.p = detail::as_int(detail::require(jn, "p", path), path + "/p");
    if (job.p < 1) throw ParseError(path + "/p", "processing time must be >= 1");
    job.cost = detail::parse_cost(detail::require(jn, "cost", path), path + "/cost");
    if (auto why = check_cost_spec(job.cost); !why.empty()) throw ParseError(path + "/cost", why);
    jobs.push_back(std::move(job));
  }

  std::vector<Edge> edges;
  if (auto it = doc.find("precedence"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("/precedence", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto path = "/precedence/" + std::to_string(k);
      const auto& e = (*it)[k];
      if (!e.is_array() || e.size() != 2) throw ParseError(path, "expected [pred_id, succ_id]");
      edges.emplace_back(static_cast<JobId>(detail::as_int(e[0], path + "/0")),
                         static_cast<JobId>(detail::as_int(e[1], path + "/1")));
    }
  }

  return make_instance(std::move(jobs), setup, capacity, std::move(edges));
}

/// Canonical text form: fixed key order, two-space indentation, trailing LF.
inline std::string emit_instance(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["setup"] = inst.setup;
  if (inst.capacity.is_bounded())
    doc["capacity"] = *inst.capacity.bound;
  else
    doc["capacity"] = "unbounded";
  doc["jobs"] = nlohmann::ordered_json::array();
  for (const auto& j : inst.jobs) {
    nlohmann::ordered_json jn;
    jn["id"] = j.id;
    jn["p"] = j.p;
    jn["cost"] = detail::emit_cost(j.cost);
    doc["jobs"].push_back(std::move(jn));
  }
  if (!inst.precedence.empty()) {
    doc["precedence"] = nlohmann::ordered_json::array();
    for (auto [a, b] : inst.precedence) doc["precedence"].push_back({a, b});
  }
  return doc.dump(2) + "\n";
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

// ---------------------------------------------------------------------------
// Random instances

/// SplitMix64 (Steele, Lea and Flood): a 64-bit counter passed through a
/// fixed xor-shift-multiply finalizer. Identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], unbiased by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
  }

  /// True with probability permille / 1000.
  bool chance(int permille) { return uniform(0, 999) < permille; }

 private:
  std::uint64_t state_;
};

enum class Profile {
  Paper,      // p in [40,60], lateness dues in [60,90], b = max(2, n/5)
  Small,      // oracle-sized: p in [1,9], mixed costs, b in [1, n-1]
  Prec,       // Small ranges, unbounded capacity, random DAG
  PaperPrec,  // Paper ranges, unbounded capacity, random DAG
};

inline Profile parse_profile(const std::string& name) {
  if (name == "paper") return Profile::Paper;
  if (name == "small") return Profile::Small;
  if (name == "prec") return Profile::Prec;
  if (name == "paper-prec") return Profile::PaperPrec;
  throw InputError("unknown profile \"" + name + "\" (expected paper, small, prec, paper-prec)");
}

struct GenOptions {
  Profile profile = Profile::Paper;
  std::optional<int> capacity;  // overrides the profile's capacity rule
  int edge_permille = 300;      // DAG edge probability for the precedence profiles
};

/// Default paper-profile capacity, kept below n where possible.
inline int paper_capacity(std::size_t n) {
  int b = std::max(2, static_cast<int>(n / 5));
  if (static_cast<std::size_t>(b) >= n) b = std::max(1, static_cast<int>(n) - 1);
  return b;
}

inline Instance gen_random(std::size_t n, std::uint64_t seed, const GenOptions& opt = {}) {
  if (n < 1) throw InputError("instance size must be >= 1");
  SplitMix64 rng(seed);
  const bool paper = opt.profile == Profile::Paper || opt.profile == Profile::PaperPrec;
  const bool prec = opt.profile == Profile::Prec || opt.profile == Profile::PaperPrec;

  std::vector<Job> jobs;
  for (std::size_t k = 0; k < n; ++k) {
    Job j;
    j.id = static_cast<JobId>(k + 1);
    if (paper) {
      j.p = rng.uniform(40, 60);
      j.cost = Lateness{rng.uniform(60, 90)};
    } else {
      j.p = rng.uniform(1, 9);
      switch (rng.uniform(0, 2)) {
        case 0: j.cost = Lateness{rng.uniform(1, 30)}; break;
        case 1: j.cost = Tardiness{rng.uniform(1, 30)}; break;
        default: j.cost = Affine{rng.uniform(0, 3), rng.uniform(-30, 10)}; break;
      }
    }
    jobs.push_back(std::move(j));
  }
  const Time setup = paper ? rng.uniform(1, 10) : rng.uniform(0, 5);

  Capacity cap;
  if (prec) {
    cap = Capacity::unbounded();
  } else if (opt.capacity) {
    cap = Capacity::bounded(*opt.capacity);
  } else if (paper) {
    cap = Capacity::bounded(paper_capacity(n));
  } else {
    cap = Capacity::bounded(n > 1 ? static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(n) - 1)) : 1);
  }

  std::vector<Edge> edges;
  if (prec)
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b)
        if (rng.chance(opt.edge_permille)) edges.emplace_back(static_cast<JobId>(a), static_cast<JobId>(b));

  return make_instance(std::move(jobs), setup, cap, std::move(edges));
}

}  // namespace sbatch
