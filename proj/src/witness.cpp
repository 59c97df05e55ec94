#include "gsa/witness.hpp"

#include <functional>
#include <map>

#include "gsa/error.hpp"

namespace gsa {

namespace {

enum class SlotKind { D, connector, hat };

struct Slot {
  SlotKind kind;
  Vec value;
  size_t copy = 0;        // D slots
  size_t cls = 0;         // complete index
  size_t component = 0;   // 1-based owner
};

class Evaluator {
 public:
  Evaluator(const GradedStarAlgebra& A, const std::vector<Slot>& slots) : A_(A), slots_(slots) {
    for (size_t s = 0; s < slots.size(); ++s)
      if (slots[s].kind == SlotKind::D) {
        auto key = std::make_pair(slots[s].copy, slots[s].cls);
        pool_of_[s] = key;
        pools_[key].push_back(s);
      }
    for (auto& [k, p] : pools_) used_[k].assign(p.size(), false);
  }

  Vec run(long long& leaves) {
    result_ = A_.zero();
    leaves_ = &leaves;
    dfs(0, std::nullopt, 0);
    return result_;
  }

 private:
  void dfs(size_t pos, const std::optional<Vec>& acc, int parity) {
    if (pos == slots_.size()) {
      ++*leaves_;
      axpy(result_, A_.scalar(parity % 2 ? -1 : 1), *acc);
      return;
    }
    const Slot& sl = slots_[pos];
    auto step = [&](const Vec& v, int par) {
      charge(static_cast<long long>(A_.dim()));
      Vec next = acc ? A_.multiply(*acc, v) : v;
      if (is_zero(next)) return;
      dfs(pos + 1, next, par);
    };
    if (sl.kind != SlotKind::D) {
      step(sl.value, parity);
      return;
    }
    auto key = pool_of_.at(pos);
    const auto& pool = pools_.at(key);
    auto& used = used_.at(key);
    int smaller = 0;
    for (size_t j = 0; j < pool.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      step(slots_[pool[j]].value, parity + smaller);
      used[j] = false;
      ++smaller;
    }
  }

  const GradedStarAlgebra& A_;
  const std::vector<Slot>& slots_;
  std::map<size_t, std::pair<size_t, size_t>> pool_of_;
  std::map<std::pair<size_t, size_t>, std::vector<size_t>> pools_;
  std::map<std::pair<size_t, size_t>, std::vector<bool>> used_;
  Vec result_;
  long long* leaves_ = nullptr;
};

// Nonzero complete-degree components of v.
std::vector<std::pair<size_t, Vec>> complete_parts(const GradedStarAlgebra& A, const Vec& v) {
  std::vector<std::pair<size_t, Vec>> out;
  for (const auto& th : A.group().elements()) {
    Vec g = A.project_group(v, th);
    if (is_zero(g)) continue;
    for (Sign s : {Sign::plus, Sign::minus}) {
      Vec part = A.project_sign(g, s);
      if (!is_zero(part)) out.push_back({complete_index(A.group(), {s, th}), part});
    }
  }
  return out;
}

}  // namespace

KemerWitness kemer_witness(const VerifiedDecomposition& dec, int mu, size_t expand_cap) {
  const auto& A = dec.algebra;
  const auto& G = A.group();
  const GroupElement e = G.identity();
  const size_t p = dec.p;
  if (mu < 1) throw Error(ErrorCode::InvalidSpec, "mu must be positive");
  if (p == 0) throw Error(ErrorCode::NoReducedWitness, "algebra is nilpotent");
  for (const auto& c : dec.data.components)
    if (!c.frame) throw Error(ErrorCode::InvalidSpec, "witness needs matrix-unit frames");

  KemerWitness out;
  out.mu = mu;
  std::vector<int> s_idx;
  std::vector<size_t> chain;
  if (p > 1) {
    auto rw = reduced_product_witness(dec);
    if (!rw) throw Error(ErrorCode::NoReducedWitness, "no nonzero C J C ... J C product");
    out.sigma = rw->sigma;
    s_idx = rw->s;
    chain = rw->chain;
    out.a = rw->a;
  } else {
    out.sigma = {1};
    s_idx = {1};
    out.a = diagonal_unit(dec, 1, 1);
  }

  auto unit = [&](const ComponentFrame& fr, int i, int j, const GroupElement& xi) -> const FrameUnit& {
    const FrameUnit* u = fr.find(i, j, xi);
    if (!u) throw Error(ErrorCode::DecompositionMismatch, "frame misses a unit");
    return *u;
  };
  auto connector = [&](const ComponentFrame& fr, int ja, int ib, int jb, int ia, const GroupElement& t1,
                       const GroupElement& t2, int sgn = 1) {
    if (fr.type == 1) return unit(fr, ja, ib, t1).first;
    const Vec& second = *unit(fr, jb, ia, t2).second;
    return sgn == 1 ? unit(fr, ja, ib, t1).first + second : unit(fr, ja, ib, t1).first - second;
  };

  long long leaves = 0;
  std::vector<std::vector<Slot>> blocks;
  for (size_t pos = 0; pos < p; ++pos) {
    const size_t l = out.sigma[pos];
    const auto& comp = dec.data.components[l - 1];
    const auto& fr = *comp.frame;
    const int s = s_idx[pos];
    const auto& D = comp.D;
    std::vector<Slot> body;
    const DElement& first = D.front();
    const DElement& last = D.back();
    body.push_back({SlotKind::connector, connector(fr, s, first.i, first.j, s, e, e), 0, 0, l});
    for (int m = 0; m < mu; ++m) {
      if (m > 0) body.push_back({SlotKind::connector, connector(fr, last.j, first.i, first.j, last.i, e, e), 0, 0, l});
      for (size_t a = 0; a < D.size(); ++a) {
        if (a > 0)
          body.push_back({SlotKind::connector, connector(fr, D[a - 1].j, D[a].i, D[a].j, D[a - 1].i, e, e), 0, 0, l});
        body.push_back({SlotKind::D, D[a].vector, static_cast<size_t>(m), complete_index(G, D[a].degree), l});
      }
    }
    // closing connector with the eta correction; exchange components may
    // also close with the skew combination first - second
    const Vec target = diagonal_unit(dec, l, s);
    std::optional<std::vector<Slot>> best, any;
    for (int sgn : {1, -1}) {
      if (fr.type == 1 && sgn == -1) break;
      for (const auto& t1 : fr.H) {
        for (const auto& t2 : fr.H) {
          if (fr.type == 1 && t2 != fr.H.front()) continue;
          auto trial = body;
          trial.push_back({SlotKind::connector, connector(fr, last.j, s, s, last.i, t1, t2, sgn), 0, 0, l});
          Vec v = Evaluator(A, trial).run(leaves);
          if (is_zero(v)) continue;
          if (!any) any = trial;
          if (proportional(v, target)) {
            best = trial;
            break;
          }
        }
        if (best) break;
      }
      if (best) break;
    }
    if (!best && !any) throw Error(ErrorCode::NoReducedWitness, "block " + std::to_string(l) + " vanishes");
    blocks.push_back(best ? *best : *any);
  }

  std::vector<Slot> slots;
  for (size_t pos = 0; pos < p; ++pos) {
    for (auto& sl : blocks[pos]) slots.push_back(sl);
    if (pos + 1 < p) slots.push_back({SlotKind::hat, dec.data.U[chain[pos]].vector, 0, 0, 0});
  }
  if (p == 1 && dec.radical.dim() > 0) {
    // one radical hat-variable after the block
    Vec block = Evaluator(A, slots).run(leaves);
    for (const auto& u : dec.data.U) {
      if (is_zero(A.multiply(block, u.vector))) continue;
      slots.push_back({SlotKind::hat, u.vector, 0, 0, 0});
      out.a = A.multiply(out.a, u.vector);
      break;
    }
  }
  for (const auto& sl : slots) out.hats += sl.kind == SlotKind::hat;

  Vec total = Evaluator(A, slots).run(leaves);
  if (is_zero(total)) throw Error(ErrorCode::NoReducedWitness, "witness evaluation vanishes");
  // keep one complete-degree part per connector and hat
  for (size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].kind == SlotKind::D) continue;
    auto parts = complete_parts(A, slots[k].value);
    bool kept = false;
    for (size_t q = 0; q < parts.size() && !kept; ++q) {
      Vec saved = slots[k].value;
      slots[k].value = parts[q].second;
      Vec v = Evaluator(A, slots).run(leaves);
      if (!is_zero(v) || q + 1 == parts.size()) {
        slots[k].cls = parts[q].first;
        total = v;
        kept = true;
      } else {
        slots[k].value = saved;
      }
    }
  }
  if (is_zero(total)) throw Error(ErrorCode::NoReducedWitness, "no multihomogeneous part survives");
  out.value = total;
  out.evaluations = leaves;
  out.alpha = proportional(total, out.a);

  int id = 1;
  out.sets.assign(mu, {});
  std::map<std::pair<size_t, size_t>, std::vector<int>> classes;
  for (const auto& sl : slots) {
    auto d = complete_from_index(G, sl.cls);
    out.vars.push_back({id, d.sign == Sign::plus ? VarKind::Y : VarKind::Z, d.degree});
    out.assignment.push_back(sl.value);
    out.word.push_back(id);
    if (sl.kind == SlotKind::D) classes[{sl.copy, sl.cls}].push_back(id);
    ++id;
  }
  out.type.assign(2 * G.order(), 0);
  for (const auto& [key, ids] : classes) {
    out.sets[key.first].push_back(ids);
    if (key.first == 0) out.type[key.second] = ids.size();
  }

  size_t terms = 1;
  for (const auto& [key, ids] : classes)
    for (size_t k = 2; k <= ids.size() && terms <= expand_cap; ++k) terms *= k;
  if (terms <= expand_cap) {
    MultilinearPolynomial f(out.vars, A.conductor());
    f.add(A.scalar(1), out.word);
    for (const auto& [key, ids] : classes)
      if (ids.size() > 1) f = alternate(f, ids);
    out.expanded_matches = evaluate(A, f, out.assignment) == out.value;
    out.f = std::move(f);
  }
  return out;
}

std::vector<size_t> beta_lower_bound(const GradedStarAlgebra& A, const VerifiedDecomposition& dec, int mu) {
  if (!(A == dec.algebra)) throw Error(ErrorCode::DecompositionMismatch, "decomposition belongs to another algebra");
  auto w = kemer_witness(dec, mu);
  auto dims = gi_parameters(dec).dims_gi;
  if (w.type != dims) throw Error(ErrorCode::NoReducedWitness, "witness type differs from dims_gi");
  return dims;
}

}  // namespace gsa
