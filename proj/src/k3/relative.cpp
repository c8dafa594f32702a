#include "beauville/k3/relative.hpp"

#include <bit>

#include "beauville/error.hpp"

namespace beauville {

namespace {

unsigned bit(int slot) { return 1u << (slot - 1); }

/// Product of two monomials prod q_i^*s F^e in any number of slots:
/// s^2 = -2 s f on a shared slot, F^2 = 0.
struct MonoProduct {
  Rational k;
  unsigned t = 0;
  int e = 0;
  bool zero = false;
};

MonoProduct mono_mul(unsigned t1, int e1, unsigned t2, int e2) {
  MonoProduct r;
  const int shared = std::popcount(t1 & t2);
  r.e = e1 + e2 + shared;
  r.t = t1 | t2;
  r.k = pow(Rational(-2), static_cast<unsigned>(shared));
  r.zero = r.e > 1;
  return r;
}

/// BV basis class on one slot as (t, e, coefficient 1).
std::pair<unsigned, int> slot_mono(Bv b, int slot) {
  switch (b) {
    case Bv::one: return {0u, 0};
    case Bv::s: return {bit(slot), 0};
    case Bv::f: return {0u, 1};
    case Bv::c: return {bit(slot), 1};
  }
  return {0u, 0};
}

/// Restriction of a monomial to a diagonal slot: s^m f^e as a BV class.
BvClass diag_restriction(int m, int e) {
  BvClass r(Bv::one);
  for (int k = 0; k < m; ++k) r = r * BvClass(Bv::s);
  for (int k = 0; k < e; ++k) r = r * BvClass(Bv::f);
  return r;
}

std::string slot_list(unsigned t, int e, const char* prefix) {
  std::string out;
  bool folded = e == 0;
  for (int i = 1; i <= 3; ++i) {
    if (!(t & bit(i))) continue;
    if (!out.empty()) out += ".";
    out += std::string(prefix) + std::to_string(i) + "*" + (folded ? "s" : "c");
    folded = true;
  }
  if (!folded) out = std::string(prefix) + "1*f";
  return out;
}

}  // namespace

// ------------------------------------------------------------------ S x_B S

std::string key_name(const RelKey& k) {
  if (k.diag) return "[Delta]";
  if (k.t == 0 && k.e == 0) return "[SxS]";
  if (k.t == 3 && k.e == 1) return "z";
  return slot_list(k.t, k.e, "p");
}

int dimension(const RelKey& k) { return k.diag ? 2 : 3 - std::popcount(k.t) - k.e; }

const std::vector<RelKey>& rel_basis() {
  static const std::vector<RelKey> b = [] {
    std::vector<RelKey> v;
    for (int e = 0; e <= 1; ++e) {
      for (unsigned t = 0; t < 4; ++t) v.push_back({false, t, e});
    }
    v.push_back({true, 0, 0});
    return v;
  }();
  return b;
}

RelCycle rel_unit() { return RelCycle(RelKey{}); }
RelCycle rel_diagonal() { return RelCycle(RelKey{true, 0, 0}); }
RelCycle rel_fiber() { return RelCycle(RelKey{false, 0, 1}); }

RelCycle pp(const BvClass& a, const BvClass& b) {
  RelCycle r;
  for (Bv x : bv_basis()) {
    if (a[x].is_zero()) continue;
    const auto [t1, e1] = slot_mono(x, 1);
    for (Bv y : bv_basis()) {
      if (b[y].is_zero()) continue;
      const auto [t2, e2] = slot_mono(y, 2);
      const auto m = mono_mul(t1, e1, t2, e2);
      if (!m.zero) r.add(RelKey{false, m.t, m.e}, a[x] * b[y] * m.k);
    }
  }
  return r;
}

RelCycle p1(const BvClass& a) { return pp(a, BvClass(Bv::one)); }
RelCycle p2(const BvClass& b) { return pp(BvClass(Bv::one), b); }

RelCycle diag_push(const BvClass& x) {
  if (!x[Bv::c].is_zero()) throw OutsideModel("Delta_* c is outside the model");
  RelCycle r = x[Bv::one] * rel_diagonal();
  r += x[Bv::s] * RelCycle(RelKey{false, 3, 0});
  r += x[Bv::f] * (RelCycle(RelKey{false, 1, 1}) + RelCycle(RelKey{false, 2, 1}));
  return r;
}

namespace {

RelCycle rel_basis_mul(const RelKey& a, const RelKey& b) {
  if (a.diag && b.diag) throw OutsideModel("[Delta].[Delta] is outside the model");
  if (a.diag || b.diag) {
    const RelKey& m = a.diag ? b : a;
    return diag_push(diag_restriction(std::popcount(m.t), m.e));
  }
  const auto p = mono_mul(a.t, a.e, b.t, b.e);
  if (p.zero) return {};
  return RelCycle(RelKey{false, p.t, p.e}, p.k);
}

}  // namespace

RelCycle rel_mul(const RelCycle& u, const RelCycle& v) {
  RelCycle r;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) r += (ca * cb) * rel_basis_mul(a, b);
  }
  return r;
}

std::pair<Bv, Bv> representative(const RelKey& k) {
  if (k.diag) throw InvalidArgument("[Delta] is not a product class");
  Bv a = (k.t & 1u) ? Bv::s : Bv::one;
  const Bv b = (k.t & 2u) ? Bv::s : Bv::one;
  if (k.e == 1) a = a == Bv::s ? Bv::c : Bv::f;
  return {a, b};
}

std::string Corr::str() const {
  std::string out = cycle.is_zero() ? "" : cycle.str();
  auto add = [&](const Rational& k, const char* name) {
    if (k.is_zero()) return;
    const Rational a = k.abs();
    const std::string term = a == Rational(1) ? name : a.str() + "*" + name;
    if (out.empty()) {
      out = k.sign() < 0 ? "-" + term : term;
    } else {
      out += (k.sign() < 0 ? " - " : " + ") + term;
    }
  };
  add(fourier, "F");
  add(inverse, "Finv");
  return out.empty() ? "0" : out;
}

namespace rules {

RelCycle pair_after_pair(Bv c, Bv d, Bv a, Bv b) {
  const RelCycle outer = pp(BvClass(a), BvClass(d));
  const BaseClass y = base_push(BvClass(b) * BvClass(c));
  return y.unit * outer + y.point * rel_mul(outer, rel_fiber());
}

RelCycle pair_after_fourier(Bv a, Bv b, Direction dir) { return pp(bv_fourier(BvClass(a), dir), BvClass(b)); }

RelCycle fourier_after_pair(Direction dir, Bv a, Bv b) { return pp(BvClass(a), bv_fourier(BvClass(b), dir)); }

}  // namespace rules

namespace {

// Basis of correspondences: a cycle key or one of the two kernels.
enum class CorrKind { cycle, fourier, inverse };

Corr basis_compose(CorrKind vk, const RelKey& v, CorrKind uk, const RelKey& u) {
  const bool v_diag = vk == CorrKind::cycle && v.diag;
  const bool u_diag = uk == CorrKind::cycle && u.diag;
  if (v_diag) {
    return uk == CorrKind::cycle ? Corr::of(RelCycle(u)) : (uk == CorrKind::fourier ? Corr::F() : Corr::Finv());
  }
  if (u_diag) {
    return vk == CorrKind::cycle ? Corr::of(RelCycle(v)) : (vk == CorrKind::fourier ? Corr::F() : Corr::Finv());
  }
  if (vk == CorrKind::cycle && uk == CorrKind::cycle) {
    const auto [c, d] = representative(v);
    const auto [a, b] = representative(u);
    return Corr::of(rules::pair_after_pair(c, d, a, b));
  }
  if (vk == CorrKind::cycle) {
    const auto [a, b] = representative(v);
    return Corr::of(rules::pair_after_fourier(a, b, uk == CorrKind::fourier ? Direction::forward : Direction::inverse));
  }
  if (uk == CorrKind::cycle) {
    const auto [a, b] = representative(u);
    return Corr::of(rules::fourier_after_pair(vk == CorrKind::fourier ? Direction::forward : Direction::inverse, a, b));
  }
  if (vk != uk) return Corr::of(rel_diagonal());
  throw OutsideModel(vk == CorrKind::fourier ? "F o F is outside the model" : "Finv o Finv is outside the model");
}

std::vector<std::tuple<CorrKind, RelKey, Rational>> components(const Corr& x) {
  std::vector<std::tuple<CorrKind, RelKey, Rational>> out;
  for (const auto& [k, c] : x.cycle.terms()) out.emplace_back(CorrKind::cycle, k, c);
  if (!x.fourier.is_zero()) out.emplace_back(CorrKind::fourier, RelKey{}, x.fourier);
  if (!x.inverse.is_zero()) out.emplace_back(CorrKind::inverse, RelKey{}, x.inverse);
  return out;
}

}  // namespace

Corr compose(const Corr& v, const Corr& u) {
  Corr r;
  for (const auto& [vk, vkey, vc] : components(v)) {
    for (const auto& [uk, ukey, uc] : components(u)) r = r + (vc * uc) * basis_compose(vk, vkey, uk, ukey);
  }
  return r;
}

Corr commutator(const Corr& a, const Corr& b) { return compose(a, b) - compose(b, a); }

Projectors build_projectors() {
  Projectors p;
  p.p0 = Corr::of(p1(BvClass::theta()));
  p.p2 = Corr::of(p2(BvClass::theta()));
  p.p1 = Corr::of(rel_diagonal()) - p.p0 - p.p2;
  return p;
}

MotivicTriple build_motivic_sl2() {
  MotivicTriple m;
  m.e0 = Corr::of(diag_push(BvClass::theta()));
  m.f0 = Corr::of(rel_unit());
  m.h0 = commutator(m.e0, m.f0);
  return m;
}

// ------------------------------------------------------- S x_B S x_B S

namespace {

TriTag pair_tag(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return TriTag::d12;
  if (i == 1 && j == 3) return TriTag::d13;
  if (i == 2 && j == 3) return TriTag::d23;
  throw InvalidArgument("diagonal needs two distinct slots in 1..3");
}

std::pair<int, int> tag_slots(TriTag t) {
  switch (t) {
    case TriTag::d12: return {1, 2};
    case TriTag::d13: return {1, 3};
    case TriTag::d23: return {2, 3};
    default: break;
  }
  throw InvalidArgument("not a pair diagonal");
}

bool is_pair(TriTag t) { return t == TriTag::d12 || t == TriTag::d13 || t == TriTag::d23; }

TripleCycle mono3(unsigned t, int e, const Rational& k = Rational(1)) {
  if (e > 1) return {};
  return TripleCycle(TriKey{TriTag::none, t, e}, k);
}

TripleCycle times_mono(const TripleCycle& x, unsigned t, int e);

/// q_ij^*[Delta] times a monomial: restrict the diagonal slots and push.
TripleCycle pair_times_mono(TriTag tag, unsigned t, int e) {
  const auto [i, j] = tag_slots(tag);
  const unsigned pair = bit(i) | bit(j);
  const int m = std::popcount(t & pair);
  const unsigned rest = t & ~pair;
  const BvClass r = diag_restriction(m, e);
  if (r.is_zero()) return {};
  if (!r[Bv::c].is_zero()) throw OutsideModel("q_ij^* Delta_* c is outside the model");
  TripleCycle out;
  if (!r[Bv::one].is_zero()) out.add(TriKey{tag, rest, 0}, r[Bv::one]);
  if (!r[Bv::s].is_zero()) out += r[Bv::s] * times_mono(mono3(pair, 0), rest, 0);
  if (!r[Bv::f].is_zero()) {
    out += r[Bv::f] * times_mono(mono3(bit(i), 1) + mono3(bit(j), 1), rest, 0);
  }
  return out;
}

TripleCycle basis_times_mono(const TriKey& a, unsigned t, int e) {
  const auto p = mono_mul(a.t, a.e, t, e);
  if (p.zero) return {};
  switch (a.tag) {
    case TriTag::none: return mono3(p.t, p.e, p.k);
    case TriTag::small:
      if (p.t != 0 || p.e != 0) throw OutsideModel("products with [Delta^sm] are outside the model");
      return TripleCycle(TriKey{TriTag::small, 0, 0}, p.k);
    default: return p.k * pair_times_mono(a.tag, p.t, p.e);
  }
}

TripleCycle times_mono(const TripleCycle& x, unsigned t, int e) {
  TripleCycle r;
  for (const auto& [k, c] : x.terms()) r += c * basis_times_mono(k, t, e);
  return r;
}

TripleCycle triple_basis_mul(const TriKey& a, const TriKey& b) {
  if (a.tag == TriTag::none) return basis_times_mono(b, a.t, a.e);
  if (b.tag == TriTag::none) return basis_times_mono(a, b.t, b.e);
  if (is_pair(a.tag) && is_pair(b.tag) && a.tag != b.tag) {
    // two different pair diagonals cut out the small diagonal
    const auto p = mono_mul(a.t, a.e, b.t, b.e);
    if (p.zero) return {};
    return p.k * basis_times_mono(TriKey{TriTag::small, 0, 0}, p.t, p.e);
  }
  throw OutsideModel("product of diagonals " + key_name(a) + " and " + key_name(b) + " is outside the model");
}

}  // namespace

std::string key_name(const TriKey& k) {
  std::string tag;
  switch (k.tag) {
    case TriTag::none: break;
    case TriTag::d12: tag = "q12*[Delta]"; break;
    case TriTag::d13: tag = "q13*[Delta]"; break;
    case TriTag::d23: tag = "q23*[Delta]"; break;
    case TriTag::small: tag = "[Delta^sm]"; break;
  }
  if (k.t == 0 && k.e == 0) return tag.empty() ? "[SxSxS]" : tag;
  const std::string m = slot_list(k.t, k.e, "q");
  return tag.empty() ? m : m + "." + tag;
}

int dimension(const TriKey& k) {
  const int base = k.tag == TriTag::none ? 4 : (k.tag == TriTag::small ? 2 : 3);
  return base - std::popcount(k.t) - k.e;
}

TripleCycle q(int i, const BvClass& x) {
  if (i < 1 || i > 3) throw InvalidArgument("q_i needs i in 1..3");
  TripleCycle r;
  for (Bv b : bv_basis()) {
    if (x[b].is_zero()) continue;
    const auto [t, e] = slot_mono(b, i);
    r.add(TriKey{TriTag::none, t, e}, x[b]);
  }
  return r;
}

TripleCycle q(int i, int j, const RelCycle& u) {
  const TriTag tag = pair_tag(i, j);
  TripleCycle r;
  for (const auto& [k, c] : u.terms()) {
    if (k.diag) {
      r.add(TriKey{tag, 0, 0}, c);
      continue;
    }
    unsigned t = 0;
    if (k.t & 1u) t |= bit(i);
    if (k.t & 2u) t |= bit(j);
    r.add(TriKey{TriTag::none, t, k.e}, c);
  }
  return r;
}

TripleCycle small_diagonal() { return TripleCycle(TriKey{TriTag::small, 0, 0}); }

TripleCycle triple_mul(const TripleCycle& x, const TripleCycle& y) {
  TripleCycle r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) r += (ca * cb) * triple_basis_mul(a, b);
  }
  return r;
}

TripleCycle small_diag_after(const RelCycle& u, const RelCycle& v) { return triple_mul(q(1, 3, u), q(2, 3, v)); }

TripleCycle after_small_diag(const RelCycle& u) { return triple_mul(q(1, 2, rel_diagonal()), q(1, 3, u)); }

TripleCycle relbv_lhs() {
  const BvClass s(Bv::s);
  const RelCycle d = rel_diagonal();
  TripleCycle r = small_diagonal();
  r -= triple_mul(q(1, s), q(2, 3, d)) + triple_mul(q(2, s), q(1, 3, d)) + triple_mul(q(3, s), q(1, 2, d));
  r += triple_mul(q(2, s), q(3, s)) + triple_mul(q(1, s), q(3, s)) + triple_mul(q(1, s), q(2, s));
  return r;
}

// ------------------------------------------------------------ absolute

namespace {

AbsTag abs_pair_tag(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return AbsTag::d12;
  if (i == 1 && j == 3) return AbsTag::d13;
  if (i == 2 && j == 3) return AbsTag::d23;
  throw InvalidArgument("diagonal needs two distinct slots");
}

std::pair<int, int> abs_tag_slots(AbsTag t) {
  switch (t) {
    case AbsTag::d12: return {1, 2};
    case AbsTag::d13: return {1, 3};
    case AbsTag::d23: return {2, 3};
    default: break;
  }
  throw InvalidArgument("not a pair diagonal");
}

/// Slotwise product of two untagged monomials; BV basis products are
/// multiples of basis elements.
std::pair<Rational, std::array<Bv, 3>> slot_product(const std::array<Bv, 3>& a, const std::array<Bv, 3>& b) {
  Rational k(1);
  std::array<Bv, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const BvClass p = BvClass(a[i]) * BvClass(b[i]);
    if (p.is_zero()) return {Rational(0), out};
    for (Bv x : bv_basis()) {
      if (!p[x].is_zero()) {
        out[i] = x;
        k *= p[x];
      }
    }
  }
  return {k, out};
}

AbsCycle abs_tag_reduce(int n, AbsTag tag, const std::array<Bv, 3>& slot, const Rational& k) {
  if (tag == AbsTag::none) return abs_mono(n, slot, k);
  if (tag == AbsTag::small) {
    for (int i = 0; i < n; ++i) {
      if (slot[i] != Bv::one) throw OutsideModel("products with the absolute small diagonal are outside the model");
    }
    return AbsCycle(AbsKey{n, tag, slot}, k);
  }
  const auto [i, j] = abs_tag_slots(tag);
  const Bv a = slot[i - 1], b = slot[j - 1];
  if (a == Bv::one && b == Bv::one) return AbsCycle(AbsKey{n, tag, slot}, k);
  if ((a == Bv::f && b == Bv::one) || (a == Bv::one && b == Bv::f)) {
    // Delta_{S*} f = p1'^*c p2'^*f + p1'^*f p2'^*c
    auto first = slot, second = slot;
    first[i - 1] = Bv::c;
    first[j - 1] = Bv::f;
    second[i - 1] = Bv::f;
    second[j - 1] = Bv::c;
    return abs_mono(n, first, k) + abs_mono(n, second, k);
  }
  throw OutsideModel("only Delta_{S*} f is rewritten on an absolute diagonal");
}

}  // namespace

std::string key_name(const AbsKey& k) {
  const std::string prefix = k.n == 2 ? "p" : "q";
  std::string out;
  for (int i = 0; i < k.n; ++i) {
    if (k.slot[i] == Bv::one) continue;
    if (!out.empty()) out += ".";
    out += prefix + std::to_string(i + 1) + "'*" + bv_name(k.slot[i]);
  }
  std::string tag;
  switch (k.tag) {
    case AbsTag::none: break;
    case AbsTag::d12: tag = k.n == 2 ? "[Delta_S]" : "q12'*[Delta_S]"; break;
    case AbsTag::d13: tag = "q13'*[Delta_S]"; break;
    case AbsTag::d23: tag = "q23'*[Delta_S]"; break;
    case AbsTag::small: tag = "[Delta_S^sm]"; break;
  }
  if (!tag.empty()) out = out.empty() ? tag : out + "." + tag;
  if (out.empty()) out = k.n == 2 ? "[SxS]" : "[SxSxS]";
  return out;
}

AbsCycle abs_mono(int n, std::array<Bv, 3> slot, const Rational& k) {
  if (n != 2 && n != 3) throw InvalidArgument("absolute products have 2 or 3 factors");
  if (n == 2) slot[2] = Bv::one;
  return AbsCycle(AbsKey{n, AbsTag::none, slot}, k);
}

AbsCycle abs_diagonal(int n, int i, int j) {
  if (n == 2 && !((i == 1 && j == 2) || (i == 2 && j == 1))) throw InvalidArgument("S x S has one diagonal");
  return AbsCycle(AbsKey{n, abs_pair_tag(i, j), {Bv::one, Bv::one, Bv::one}});
}

AbsCycle abs_small_diagonal() { return AbsCycle(AbsKey{3, AbsTag::small, {Bv::one, Bv::one, Bv::one}}); }

AbsCycle abs_mul(const AbsCycle& x, const AbsCycle& y) {
  AbsCycle r;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a.n != b.n) throw DimensionMismatch("absolute products with different factor counts");
      if (a.tag != AbsTag::none && b.tag != AbsTag::none) {
        throw OutsideModel("products of absolute diagonals are outside the model");
      }
      const auto [k, slot] = slot_product(a.slot, b.slot);
      if (k.is_zero()) continue;
      const AbsTag tag = a.tag != AbsTag::none ? a.tag : b.tag;
      r += abs_tag_reduce(a.n, tag, slot, ca * cb * k);
    }
  }
  return r;
}

AbsCycle absolute_push(const RelCycle& u) {
  const AbsCycle locus = abs_mono(2, {Bv::f, Bv::one, Bv::one}) + abs_mono(2, {Bv::one, Bv::f, Bv::one});
  AbsCycle r;
  for (const auto& [k, c] : u.terms()) {
    if (k.diag) {
      r += c * abs_diagonal(2, 1, 2);
      continue;
    }
    const auto [a, b] = representative(k);
    r += c * abs_mul(abs_mono(2, {a, b, Bv::one}), locus);
  }
  return r;
}

AbsCycle absolute_push(const TripleCycle& u) {
  auto f_on = [](std::initializer_list<int> slots) {
    std::array<Bv, 3> s{Bv::one, Bv::one, Bv::one};
    for (int i : slots) s[i - 1] = Bv::f;
    return abs_mono(3, s);
  };
  const AbsCycle triple_locus = f_on({2, 3}) + f_on({1, 3}) + f_on({1, 2});
  AbsCycle r;
  for (const auto& [k, c] : u.terms()) {
    if (k.tag == TriTag::small) {
      if (k.t != 0 || k.e != 0) throw OutsideModel("unsupported class on the small diagonal");
      r += c * abs_small_diagonal();
      continue;
    }
    std::array<Bv, 3> slot{Bv::one, Bv::one, Bv::one};
    for (int i = 1; i <= 3; ++i) {
      if (k.t & bit(i)) slot[i - 1] = Bv::s;
    }
    if (k.e == 1) {
      // put F on the first slot, folding s f = c
      int i = 1;
      while (i <= 3 && !(k.t & bit(i))) ++i;
      if (i <= 3) {
        slot[i - 1] = Bv::c;
      } else {
        slot[0] = Bv::f;
      }
    }
    if (k.tag == TriTag::none) {
      r += c * abs_mul(abs_mono(3, slot), triple_locus);
      continue;
    }
    // {x_i = x_j, pi(x_k) = pi(x_i)} = q'_ij[Delta_S] . (q'_i^*f + q'_k^*f)
    const auto [i, j] = tag_slots(k.tag);
    const int kk = 6 - i - j;
    const AbsCycle locus = f_on({i}) + f_on({kk});
    const AbsCycle base = abs_mul(abs_mono(3, slot), abs_diagonal(3, i, j));
    r += c * abs_mul(base, locus);
  }
  return r;
}

AbsCycle bv_absolute_relation() {
  auto mono = [](Bv a, Bv b, Bv c) { return abs_mono(3, {a, b, c}); };
  AbsCycle r = abs_small_diagonal();
  r -= abs_mul(mono(Bv::c, Bv::one, Bv::one), abs_diagonal(3, 2, 3));
  r -= abs_mul(mono(Bv::one, Bv::c, Bv::one), abs_diagonal(3, 1, 3));
  r -= abs_mul(mono(Bv::one, Bv::one, Bv::c), abs_diagonal(3, 1, 2));
  r += mono(Bv::one, Bv::c, Bv::c) + mono(Bv::c, Bv::one, Bv::c) + mono(Bv::c, Bv::c, Bv::one);
  return r;
}

}  // namespace beauville
