#include "gsa/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gsa/error.hpp"

namespace gsa {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw Error(ErrorCode::InvalidSpec, "group needs at least one factor");
  order_ = 1;
  exponent_ = 1;
  for (int o : orders_) {
    if (o < 1) throw Error(ErrorCode::InvalidSpec, "cyclic factor order must be >= 1");
    order_ *= static_cast<size_t>(o);
    exponent_ = std::lcm(exponent_, o);
  }
  if (order_ > 1'000'000) throw Error(ErrorCode::GroupTooLarge, "group order");
  GroupElement g(orders_.size(), 0);
  for (size_t n = 0; n < order_; ++n) {
    elements_.push_back(g);
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
      if (++g[i] < orders_[i]) break;
      g[i] = 0;
    }
  }
}

GroupElement FiniteAbelianGroup::reduce(GroupElement g) const {
  if (g.size() != orders_.size()) throw Error(ErrorCode::WrongGroup, "element rank");
  for (size_t i = 0; i < g.size(); ++i) g[i] = ((g[i] % orders_[i]) + orders_[i]) % orders_[i];
  return g;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] - b[i] + orders_[i]) % orders_[i];
  return r;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const { return sub(identity(), a); }

GroupElement FiniteAbelianGroup::mul(long long k, const GroupElement& a) const {
  GroupElement r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<int>(((k % orders_[i]) * a[i] % orders_[i] + orders_[i]) % orders_[i]);
  return r;
}

bool FiniteAbelianGroup::is_identity(const GroupElement& g) const {
  return std::all_of(g.begin(), g.end(), [](int x) { return x == 0; });
}

bool FiniteAbelianGroup::valid(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] >= orders_[i]) return false;
  return true;
}

int FiniteAbelianGroup::element_order(const GroupElement& g) const {
  int o = 1;
  for (size_t i = 0; i < g.size(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], g[i]));
  return o;
}

size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  if (!valid(g)) throw Error(ErrorCode::WrongGroup, "element " + element_to_string(g));
  size_t idx = 0;
  for (size_t i = 0; i < g.size(); ++i) idx = idx * orders_[i] + g[i];
  return idx;
}

std::string element_to_string(const GroupElement& g) {
  std::string s;
  for (size_t i = 0; i < g.size(); ++i) s += (i ? "." : "") + std::to_string(g[i]);
  return s;
}

size_t complete_index(const FiniteAbelianGroup& G, const CompleteDegree& d) {
  return 2 * G.index_of(d.degree) + (d.sign == Sign::minus ? 1 : 0);
}

CompleteDegree complete_from_index(const FiniteAbelianGroup& G, size_t idx) {
  return {idx % 2 ? Sign::minus : Sign::plus, G.elements().at(idx / 2)};
}

std::string complete_to_string(const CompleteDegree& d) {
  return std::string(d.sign == Sign::plus ? "+" : "-") + element_to_string(d.degree);
}

size_t& enumeration_cap() {
  static size_t cap = 64;
  return cap;
}

Subgroup generated_subgroup(const FiniteAbelianGroup& G, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{G.identity()};
  std::deque<GroupElement> todo{G.identity()};
  while (!todo.empty()) {
    GroupElement a = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      GroupElement b = G.add(a, g);
      if (seen.insert(b).second) todo.push_back(b);
    }
  }
  return Subgroup(seen.begin(), seen.end());
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& G) {
  if (G.order() > enumeration_cap())
    throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(G.order()));
  std::set<Subgroup> found{Subgroup{G.identity()}};
  std::deque<Subgroup> todo{Subgroup{G.identity()}};
  while (!todo.empty()) {
    Subgroup H = todo.front();
    todo.pop_front();
    for (const auto& g : G.elements()) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::vector<GroupElement> gens = generators(G, H);
      gens.push_back(g);
      Subgroup K = generated_subgroup(G, gens);
      if (found.insert(K).second) todo.push_back(K);
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<int>> enumerate_characters(const FiniteAbelianGroup& G) {
  if (G.order() > enumeration_cap())
    throw Error(ErrorCode::GroupTooLarge, "order " + std::to_string(G.order()));
  return G.elements();
}

CycloScalar character_value(const FiniteAbelianGroup& G, const std::vector<int>& chi,
                            const GroupElement& g, int conductor) {
  int m = G.exponent();
  if (conductor % m != 0)
    throw Error(ErrorCode::ConductorMismatch, "conductor must be a multiple of the exponent");
  long long e = 0;
  for (size_t i = 0; i < g.size(); ++i)
    e += static_cast<long long>(chi[i]) * g[i] * (m / G.orders()[i]);
  return root_of_unity(conductor, e * (conductor / m));
}

std::vector<GroupElement> generators(const FiniteAbelianGroup& G, const Subgroup& H) {
  std::vector<GroupElement> gens;
  size_t current = 1;
  for (const auto& h : H) {
    if (current == H.size()) break;
    auto trial = gens;
    trial.push_back(h);
    size_t n = generated_subgroup(G, trial).size();
    if (n > current) {
      gens = trial;
      current = n;
    }
  }
  return gens;
}

TwoCocycle::TwoCocycle(Subgroup H, int conductor) : H_(std::move(H)), m_(conductor) {
  std::sort(H_.begin(), H_.end());
  table_.assign(H_.size() * H_.size(), CycloScalar(conductor, 1L));
}

size_t TwoCocycle::position(const GroupElement& h) const {
  auto it = std::lower_bound(H_.begin(), H_.end(), h);
  if (it == H_.end() || *it != h)
    throw Error(ErrorCode::InvalidCocycle, "element " + element_to_string(h) + " not in H");
  return static_cast<size_t>(it - H_.begin());
}

bool TwoCocycle::contains(const GroupElement& h) const {
  return std::binary_search(H_.begin(), H_.end(), h);
}

const CycloScalar& TwoCocycle::operator()(const GroupElement& a, const GroupElement& b) const {
  const auto& v = table_[position(a) * H_.size() + position(b)];
  if (!v) throw Error(ErrorCode::IncompleteTable, "missing entry");
  return *v;
}

void TwoCocycle::set(const GroupElement& a, const GroupElement& b, CycloScalar v) {
  if (v.conductor() != m_) throw Error(ErrorCode::ConductorMismatch, "cocycle value");
  if (table_.empty()) table_.resize(H_.size() * H_.size());
  table_[position(a) * H_.size() + position(b)] = std::move(v);
}

bool TwoCocycle::complete() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& v) { return v.has_value(); });
}

CocycleCheck verify_cocycle(const FiniteAbelianGroup& G, const TwoCocycle& z) {
  if (!z.complete()) throw Error(ErrorCode::IncompleteTable, "cocycle table has gaps");
  const auto& H = z.subgroup();
  for (const auto& a : H) {
    for (const auto& b : H) {
      if (!z.contains(G.add(a, b))) throw Error(ErrorCode::InvalidCocycle, "H not closed");
      if (z(a, b).is_zero()) return {false, {a, b}};
    }
  }
  for (const auto& a : H)
    for (const auto& b : H)
      for (const auto& c : H)
        if (z(a, b) * z(G.add(a, b), c) != z(a, G.add(b, c)) * z(b, c)) return {false, {a, b, c}};
  return {};
}

std::optional<std::vector<CycloScalar>> coboundary_reduce(const FiniteAbelianGroup& G,
                                                          const TwoCocycle& z) {
  if (!z.complete()) throw Error(ErrorCode::IncompleteTable, "cocycle table has gaps");
  const auto& H = z.subgroup();
  int m = z.conductor();
  long long bound = static_cast<long long>(m) * static_cast<long long>(H.size());
  // roots of unity of Q(zeta_m): +-zeta_m^k
  std::vector<CycloScalar> roots;
  for (int s = 0; s < 2; ++s)
    for (int k = 0; k < m; ++k) {
      CycloScalar r = root_of_unity(m, k);
      if (s) r = -r;
      int ord = root_order(r);
      if (ord == 0 || bound % ord != 0) continue;
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  std::vector<GroupElement> gens = generators(G, H);
  std::vector<size_t> choice(gens.size(), 0);
  while (true) {
    std::map<GroupElement, CycloScalar> mu;
    mu.emplace(G.identity(), CycloScalar(m, 1L));
    std::deque<GroupElement> todo{G.identity()};
    bool ok = true;
    while (!todo.empty() && ok) {
      GroupElement a = todo.front();
      todo.pop_front();
      for (size_t g = 0; g < gens.size(); ++g) {
        GroupElement b = G.add(a, gens[g]);
        CycloScalar v = mu.at(a) * roots[choice[g]] / z(a, gens[g]);
        auto it = mu.find(b);
        if (it == mu.end()) {
          mu.emplace(b, v);
          todo.push_back(b);
        }
      }
    }
    // generator values must match the propagated ones and the identity must hold everywhere
    for (size_t g = 0; g < gens.size() && ok; ++g)
      ok = mu.at(gens[g]) == roots[choice[g]];
    for (const auto& a : H) {
      if (!ok) break;
      for (const auto& b : H)
        if (z(a, b) * mu.at(G.add(a, b)) != mu.at(a) * mu.at(b)) {
          ok = false;
          break;
        }
    }
    if (ok) {
      std::vector<CycloScalar> out;
      for (const auto& h : H) out.push_back(mu.at(h));
      return out;
    }
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == roots.size()) choice[i++] = 0;
    if (i == choice.size()) return std::nullopt;
  }
}

int chi4(const FiniteAbelianGroup& G, const GroupElement& x) {
  if (G.orders() != std::vector<int>{4}) throw Error(ErrorCode::WrongGroup, "chi4 needs Z/4");
  return G.reduce(x)[0] >= 2 ? 1 : 0;
}

}  // namespace gsa
