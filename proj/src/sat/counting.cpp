#include "satmps/sat/counting.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace satmps::sat {
namespace {

constexpr std::int8_t kUnassigned = -1;
constexpr std::int8_t kFree = 2;  // unconstrained, counted as a factor of two

void check_limit(const CnfInstance& instance, int limit, const char* what) {
  if (instance.n() > limit)
    throw CountLimitExceeded(std::string(what) + ": n=" + std::to_string(instance.n()) + " exceeds limit " +
                             std::to_string(limit));
}

class Dpll {
 public:
  explicit Dpll(const CnfInstance& instance) : n_(instance.n()), values_(static_cast<std::size_t>(n_) + 1, kUnassigned) {
    clauses_.reserve(instance.clauses().size());
    for (const auto& c : instance.clauses())
      clauses_.push_back({c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()});
  }

  std::uint64_t count() { return count_node(); }

  bool satisfiable() { return sat_node(); }

  // Calls visit(values) for every satisfying cube; kFree entries are wildcards.
  template <class Visit>
  bool enumerate(Visit&& visit) {
    return enumerate_node(visit);
  }

 private:
  enum class Status { conflict, open };

  int lit_value(int lit) const {
    const auto v = values_[static_cast<std::size_t>(lit < 0 ? -lit : lit)];
    if (v == kUnassigned || v == kFree) return -1;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }

  void assign(int var, std::int8_t value) {
    values_[static_cast<std::size_t>(var)] = value;
    trail_.push_back(var);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[static_cast<std::size_t>(trail_.back())] = kUnassigned;
      trail_.pop_back();
    }
  }

  Status propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = lit_value(lit);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v == -1) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return Status::conflict;
        if (unassigned == 1) {
          assign(last < 0 ? -last : last, last > 0 ? 1 : 0);
          changed = true;
        }
      }
    }
    return Status::open;
  }

  // Marks constrained variables; returns false if every clause is satisfied.
  bool constrained(std::vector<char>& flag) const {
    std::fill(flag.begin(), flag.end(), 0);
    bool open = false;
    for (const auto& c : clauses_) {
      bool sat = false;
      for (int lit : c)
        if (lit_value(lit) == 1) sat = true;
      if (sat) continue;
      open = true;
      for (int lit : c)
        if (lit_value(lit) == -1) flag[static_cast<std::size_t>(lit < 0 ? -lit : lit)] = 1;
    }
    return open;
  }

  // Marks unassigned, unconstrained variables as free; returns how many.
  int mark_free(const std::vector<char>& flag) {
    int k = 0;
    for (int v = 1; v <= n_; ++v) {
      if (values_[static_cast<std::size_t>(v)] == kUnassigned && !flag[static_cast<std::size_t>(v)]) {
        assign(v, kFree);
        ++k;
      }
    }
    return k;
  }

  int first_constrained(const std::vector<char>& flag) const {
    for (int v = 1; v <= n_; ++v)
      if (flag[static_cast<std::size_t>(v)] && values_[static_cast<std::size_t>(v)] == kUnassigned) return v;
    return 0;
  }

  std::uint64_t count_node() {
    const std::size_t mark = trail_.size();
    if (propagate() == Status::conflict) {
      undo_to(mark);
      return 0;
    }
    std::vector<char> flag(static_cast<std::size_t>(n_) + 1);
    const bool open = constrained(flag);
    const int free_vars = mark_free(flag);
    std::uint64_t total = 0;
    if (!open) {
      total = std::uint64_t{1} << free_vars;
    } else {
      const int var = first_constrained(flag);
      std::uint64_t sub = 0;
      for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
        const std::size_t branch = trail_.size();
        assign(var, value);
        sub += count_node();
        undo_to(branch);
      }
      total = sub << free_vars;
    }
    undo_to(mark);
    return total;
  }

  bool sat_node() {
    const std::size_t mark = trail_.size();
    if (propagate() == Status::conflict) {
      undo_to(mark);
      return false;
    }
    // Pure literals: a variable occurring with a single polarity in open clauses.
    std::vector<std::uint8_t> polarity(static_cast<std::size_t>(n_) + 1, 0);
    bool open = false;
    for (const auto& c : clauses_) {
      bool sat = false;
      for (int lit : c)
        if (lit_value(lit) == 1) sat = true;
      if (sat) continue;
      open = true;
      for (int lit : c)
        if (lit_value(lit) == -1) polarity[static_cast<std::size_t>(lit < 0 ? -lit : lit)] |= lit > 0 ? 1 : 2;
    }
    if (!open) {
      undo_to(mark);
      return true;
    }
    bool pure_found = false;
    for (int v = 1; v <= n_; ++v) {
      const auto p = polarity[static_cast<std::size_t>(v)];
      if (p == 1 || p == 2) {
        assign(v, p == 1 ? 1 : 0);
        pure_found = true;
      }
    }
    bool result = false;
    if (pure_found) {
      result = sat_node();
    } else {
      int var = 0;
      for (int v = 1; v <= n_ && var == 0; ++v)
        if (polarity[static_cast<std::size_t>(v)] != 0) var = v;
      for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
        const std::size_t branch = trail_.size();
        assign(var, value);
        result = sat_node();
        undo_to(branch);
        if (result) break;
      }
    }
    undo_to(mark);
    return result;
  }

  template <class Visit>
  bool enumerate_node(Visit& visit) {
    const std::size_t mark = trail_.size();
    if (propagate() == Status::conflict) {
      undo_to(mark);
      return true;
    }
    std::vector<char> flag(static_cast<std::size_t>(n_) + 1);
    const bool open = constrained(flag);
    mark_free(flag);
    bool keep_going = true;
    if (!open) {
      keep_going = visit(values_);
    } else {
      const int var = first_constrained(flag);
      for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
        const std::size_t branch = trail_.size();
        assign(var, value);
        keep_going = enumerate_node(visit);
        undo_to(branch);
        if (!keep_going) break;
      }
    }
    undo_to(mark);
    return keep_going;
  }

  int n_;
  std::vector<std::array<int, 3>> clauses_;
  std::vector<std::int8_t> values_;
  std::vector<int> trail_;
};

}  // namespace

std::uint64_t count_solutions_enumerate(const CnfInstance& instance, int limit) {
  check_limit(instance, std::min(limit, 40), "exhaustive count");
  const int n = instance.n();
  std::vector<std::uint64_t> masks, patterns;
  for (const auto& c : instance.clauses()) {
    masks.push_back(c.mask(n));
    patterns.push_back(c.violating_pattern(n));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (std::size_t j = 0; j < masks.size() && ok; ++j) ok = (x & masks[j]) != patterns[j];
    count += ok ? 1 : 0;
  }
  return count;
}

std::uint64_t count_solutions_dpll(const CnfInstance& instance, int limit) {
  check_limit(instance, std::min(limit, 63), "DPLL count");
  return Dpll(instance).count();
}

std::uint64_t count_solutions(const CnfInstance& instance, int limit) { return count_solutions_dpll(instance, limit); }

bool is_satisfiable(const CnfInstance& instance) { return Dpll(instance).satisfiable(); }

std::vector<std::uint64_t> enumerate_solutions(const CnfInstance& instance, std::size_t max_solutions) {
  const int n = instance.n();
  if (n > 63) throw CountLimitExceeded("enumerate_solutions requires n <= 63");
  std::vector<std::uint64_t> out;
  bool overflow = false;
  Dpll solver(instance);
  solver.enumerate([&](const std::vector<std::int8_t>& values) {
    std::uint64_t base = 0;
    std::vector<int> free_bits;
    for (int v = 1; v <= n; ++v) {
      const auto val = values[static_cast<std::size_t>(v)];
      if (val == 1) base |= std::uint64_t{1} << (n - v);
      if (val == kFree || val == kUnassigned) free_bits.push_back(n - v);
    }
    if (free_bits.size() >= 63 || out.size() + (std::uint64_t{1} << free_bits.size()) > max_solutions) {
      overflow = true;
      return false;
    }
    const std::uint64_t combos = std::uint64_t{1} << free_bits.size();
    for (std::uint64_t k = 0; k < combos; ++k) {
      std::uint64_t x = base;
      for (std::size_t b = 0; b < free_bits.size(); ++b)
        if ((k >> b) & 1U) x |= std::uint64_t{1} << free_bits[b];
      out.push_back(x);
    }
    return true;
  });
  if (overflow)
    throw CountLimitExceeded("more than " + std::to_string(max_solutions) + " satisfying assignments");
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace satmps::sat
