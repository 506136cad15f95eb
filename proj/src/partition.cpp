#include "dimsat/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dimsat {

OccurrenceIndex::OccurrenceIndex(const Formula& f) : offsets_(f.num_vars + 1, 0) {
  for (const auto& c : f.clauses)
    for (auto l : c) ++offsets_[l.var + 1];
  for (Var v = 0; v < f.num_vars; ++v) offsets_[v + 1] += offsets_[v];
  entries_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < f.clauses.size(); ++i)
    for (auto l : f.clauses[i]) entries_[fill[l.var]++] = Occurrence{i, l.positive};
}

Move::Move(std::vector<Var> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("move must flip at least one variable");
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw std::invalid_argument("move contains a duplicate variable");
}

ClausePartition::ClausePartition(const Formula& f, Assignment a)
    : ClausePartition(f, std::make_shared<const OccurrenceIndex>(f), std::move(a)) {}

ClausePartition::ClausePartition(const Formula& f,
                                 std::shared_ptr<const OccurrenceIndex> occ,
                                 Assignment a)
    : formula_(&f), occ_(std::move(occ)) {
  if (!is_normalized(f))
    throw std::invalid_argument("partition requires a normalized formula without empty clauses");
  if (f.clauses.size() >= npos) throw std::invalid_argument("too many clauses");
  reset(std::move(a));
}

void ClausePartition::reset(Assignment a) {
  const Formula& f = *formula_;
  if (a.size() != f.num_vars)
    throw std::invalid_argument("assignment length does not match num_vars");
  assignment_ = std::move(a);

  true_count_.assign(f.clauses.size(), 0);
  unsat_.clear();
  unsat_pos_.assign(f.clauses.size(), npos);
  left_occ_.assign(f.num_vars, 0);
  left_vars_.clear();
  left_var_pos_.assign(f.num_vars, npos);

  for (std::uint32_t c = 0; c < f.clauses.size(); ++c) {
    std::uint32_t t = 0;
    for (auto l : f.clauses[c]) t += assignment_.satisfies(l);
    true_count_[c] = t;
    if (t == 0) make_left(c);
  }
}

void ClausePartition::make_left(std::uint32_t c) {
  unsat_pos_[c] = static_cast<std::uint32_t>(unsat_.size());
  unsat_.push_back(c);
  for (auto l : formula_->clauses[c]) {
    if (left_occ_[l.var]++ == 0) {
      left_var_pos_[l.var] = static_cast<std::uint32_t>(left_vars_.size());
      left_vars_.push_back(l.var);
    }
  }
}

void ClausePartition::make_right(std::uint32_t c) {
  const std::uint32_t pos = unsat_pos_[c];
  const std::uint32_t last = unsat_.back();
  unsat_[pos] = last;
  unsat_pos_[last] = pos;
  unsat_.pop_back();
  unsat_pos_[c] = npos;
  for (auto l : formula_->clauses[c]) {
    if (--left_occ_[l.var] == 0) {
      const std::uint32_t vp = left_var_pos_[l.var];
      const Var moved = left_vars_.back();
      left_vars_[vp] = moved;
      left_var_pos_[moved] = vp;
      left_vars_.pop_back();
      left_var_pos_[l.var] = npos;
    }
  }
}

FlipDelta ClausePartition::flip(Var v) {
  FlipDelta d;
  d.var = v;
  d.dim_before = dimensionality();
  const bool now_true = !assignment_[v];
  assignment_.flip(v);
  for (const auto& o : occ_->of(v)) {
    if (o.positive == now_true) {
      if (true_count_[o.clause]++ == 0) {
        make_right(o.clause);
        ++d.made;
      }
    } else {
      if (--true_count_[o.clause] == 0) {
        make_left(o.clause);
        ++d.broken;
      }
    }
  }
  d.dim_after = dimensionality();
  return d;
}

MoveDelta ClausePartition::apply(const Move& m) {
  MoveDelta d;
  d.dim_before = dimensionality();
  d.unsat_before = unsat_count();
  for (Var v : m.vars()) {
    const auto fd = flip(v);
    d.made += fd.made;
    d.broken += fd.broken;
  }
  d.dim_after = dimensionality();
  d.unsat_after = unsat_count();
  return d;
}

std::vector<Var> ClausePartition::left_variables() const {
  std::vector<Var> vars = left_vars_;
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool ClausePartition::same_state(const ClausePartition& other) const {
  if (assignment_ != other.assignment_ || true_count_ != other.true_count_ ||
      left_occ_ != other.left_occ_ || unsat_.size() != other.unsat_.size() ||
      left_vars_.size() != other.left_vars_.size())
    return false;
  for (auto c : unsat_)
    if (!other.is_unsat(c)) return false;
  for (auto v : left_vars_)
    if (other.left_occ_[v] == 0) return false;
  return true;
}

std::vector<RankEntry> occurrence_ranking(const ClausePartition& p) {
  std::vector<RankEntry> r;
  r.reserve(p.dimensionality());
  for (Var v : p.left_variables()) r.push_back({v, p.left_occurrence(v)});
  std::stable_sort(r.begin(), r.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.count > b.count; });
  return r;
}

bool rebuild_check(const ClausePartition& p, const Formula& f) {
  const Assignment& a = p.assignment();
  if (a.size() != f.num_vars || f.clauses.size() != p.formula().clauses.size()) return false;
  thread_local std::vector<std::uint32_t> occ;
  occ.assign(f.num_vars, 0);
  std::size_t unsat = 0;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    std::uint32_t count = 0;
    for (auto l : f.clauses[c]) count += a.satisfies(l);
    if (count != p.sat_true_count(c) || (count == 0) != p.is_unsat(c)) return false;
    if (count == 0) {
      ++unsat;
      for (auto l : f.clauses[c]) ++occ[l.var];
    }
  }
  if (unsat != p.unsat_count()) return false;
  for (auto c : p.unsat_clauses())
    if (c >= f.clauses.size() || !p.is_unsat(c)) return false;
  std::size_t dim = 0;
  for (Var v = 0; v < f.num_vars; ++v) {
    if (occ[v] != p.left_occurrence(v)) return false;
    dim += occ[v] > 0;
  }
  if (dim != p.dimensionality()) return false;
  for (auto v : p.left_variables())
    if (occ[v] == 0) return false;
  return true;
}

std::uint64_t count_transitions(std::size_t n) {
  if (n >= 64) return std::numeric_limits<std::uint64_t>::max();
  return (std::uint64_t{1} << n) - 1;
}

}  // namespace dimsat
