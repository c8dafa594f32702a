#include "beauville/taut/expr.hpp"

#include <algorithm>
#include <vector>

#include "beauville/error.hpp"

namespace beauville {

const char* taut_gen_name(TautGen g) {
  switch (g) {
    case TautGen::theta: return "theta";
    case TautGen::psi1: return "psi1";
    case TautGen::psi2: return "psi2";
    case TautGen::xi2: return "xi2";
    case TautGen::kappa1: return "kappa1";
    case TautGen::delta: return "delta";
  }
  return "?";
}

const char* locus_name(Locus l) {
  switch (l) {
    case Locus::total: return "total";
    case Locus::open: return "open";
    case Locus::boundary: return "boundary";
    case Locus::base: return "base";
    case Locus::boundary_base: return "boundary_base";
  }
  return "?";
}

Locus boundary_of(Locus l) {
  switch (l) {
    case Locus::total: return Locus::boundary;
    case Locus::base: return Locus::boundary_base;
    default: throw OutsideModel(std::string("no boundary pushforward into ") + locus_name(l));
  }
}

int relative_dim(Locus l, int g) {
  switch (l) {
    case Locus::total:
    case Locus::open: return g;
    case Locus::boundary: return g - 1;
    default: throw InvalidArgument(std::string(locus_name(l)) + " is not a Jacobian");
  }
}

bool allows(Locus l, TautGen x) {
  switch (l) {
    case Locus::total: return x == TautGen::theta || x == TautGen::kappa1 || x == TautGen::delta;
    case Locus::open: return x == TautGen::theta || x == TautGen::kappa1;
    case Locus::boundary:
      return x == TautGen::theta || x == TautGen::psi1 || x == TautGen::psi2 || x == TautGen::xi2;
    case Locus::base: return x == TautGen::kappa1 || x == TautGen::delta;
    case Locus::boundary_base: return x == TautGen::psi1 || x == TautGen::psi2;
  }
  return false;
}

int weight(const Mono& m) {
  return 2 * m[static_cast<int>(TautGen::theta)] + m[static_cast<int>(TautGen::xi2)];
}

namespace {

void check_mono(Locus l, const Mono& m) {
  for (int i = 0; i < kTautGens; ++i) {
    if (m[i] < 0) throw InvalidArgument("negative exponent");
    if (m[i] > 0 && !allows(l, static_cast<TautGen>(i))) {
      throw InvalidArgument(std::string(taut_gen_name(static_cast<TautGen>(i))) + " does not live on the " +
                            locus_name(l) + " locus");
    }
  }
}

Mono add_mono(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kTautGens; ++i) m[i] = a[i] + b[i];
  return m;
}

std::string mono_str(const Mono& m) {
  std::string out;
  for (int i = 0; i < kTautGens; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += taut_gen_name(static_cast<TautGen>(i));
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<std::string, RatPoly>>& parts) {
  std::string out;
  for (const auto& [name, c] : parts) {
    std::string cs = c.str();
    std::string term;
    if (name.empty()) {
      term = detail::compound(cs) ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      term = name;
    } else if (cs == "-1") {
      term = "-" + name;
    } else {
      term = (detail::compound(cs) ? "(" + cs + ")" : cs) + "*" + name;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

TautExpr TautExpr::scalar(Locus l, int g, const RatPoly& c) { return monomial(l, g, Mono{}, c); }

TautExpr TautExpr::gen(Locus l, int g, TautGen x) {
  Mono m{};
  m[static_cast<int>(x)] = 1;
  return monomial(l, g, m);
}

TautExpr TautExpr::monomial(Locus l, int g, const Mono& m, const RatPoly& c) {
  check_mono(l, m);
  TautExpr x(l, g);
  x.add({Stratum::own, m}, c);
  return x;
}

TautExpr TautExpr::push_from(const TautExpr& inner) {
  Locus ambient;
  if (inner.locus() == Locus::boundary) {
    ambient = Locus::total;
  } else if (inner.locus() == Locus::boundary_base) {
    ambient = Locus::base;
  } else {
    throw InvalidArgument(std::string("cannot push from the ") + locus_name(inner.locus()) + " locus");
  }
  TautExpr x(ambient, inner.genus());
  for (const auto& [t, c] : inner.terms()) {
    if (t.stratum != Stratum::own) throw OutsideModel("nested boundary pushforward");
    x.add({Stratum::pushed, t.mono}, c);
  }
  return x;
}

TautExpr TautExpr::deep(int g, const RatPoly& c) {
  TautExpr x(Locus::base, g);
  x.add({Stratum::deep, Mono{}}, c);
  return x;
}

TautExpr TautExpr::own() const {
  TautExpr out(locus_, genus_);
  for (const auto& [t, c] : terms_)
    if (t.stratum == Stratum::own) out.add(t, c);
  return out;
}

TautExpr TautExpr::pushed_inner() const {
  TautExpr out(boundary_of(locus_), genus_);
  for (const auto& [t, c] : terms_)
    if (t.stratum == Stratum::pushed) out.add({Stratum::own, t.mono}, c);
  return out;
}

RatPoly TautExpr::deep_coeff() const {
  auto it = terms_.find({Stratum::deep, Mono{}});
  return it == terms_.end() ? RatPoly() : it->second;
}

void TautExpr::add(const TautTerm& t, const RatPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TautExpr::require_compatible(const TautExpr& o) const {
  if (locus_ != o.locus_ || genus_ != o.genus_) {
    throw DimensionMismatch(std::string("classes on different loci: ") + locus_name(locus_) + "/g=" +
                            std::to_string(genus_) + " and " + locus_name(o.locus_) + "/g=" +
                            std::to_string(o.genus_));
  }
}

TautExpr TautExpr::operator-() const {
  TautExpr out(locus_, genus_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
  return out;
}

TautExpr& TautExpr::operator+=(const TautExpr& o) {
  require_compatible(o);
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

TautExpr& TautExpr::operator-=(const TautExpr& o) { return *this += -o; }

TautExpr operator*(const RatPoly& k, const TautExpr& x) {
  TautExpr out(x.locus_, x.genus_);
  for (const auto& [t, c] : x.terms_) out.add(t, k * c);
  return out;
}

TautExpr operator*(const TautExpr& x, const TautExpr& y) {
  x.require_compatible(y);
  TautExpr out(x.locus_, x.genus_);
  for (const auto& [s, a] : x.terms_) {
    for (const auto& [t, b] : y.terms_) {
      const bool sd = s.stratum == Stratum::deep, td = t.stratum == Stratum::deep;
      if (sd || td) {
        const Mono& other = sd ? t.mono : s.mono;
        const bool other_unit = other == Mono{} && (sd ? t.stratum : s.stratum) == Stratum::own;
        if (!other_unit) throw OutsideModel("products with r_*[M04 \\ D] are outside the model");
        out.add({Stratum::deep, Mono{}}, a * b);
      } else if (s.stratum == Stratum::own && t.stratum == Stratum::own) {
        out.add({Stratum::own, add_mono(s.mono, t.mono)}, a * b);
      } else if (s.stratum == Stratum::pushed && t.stratum == Stratum::pushed) {
        throw OutsideModel("product of two boundary pushforwards");
      } else {
        // own . iota_* y = iota_*(iota^* own . y)
        const TautTerm& o = s.stratum == Stratum::own ? s : t;
        const TautTerm& p = s.stratum == Stratum::own ? t : s;
        const TautExpr pulled = boundary_pull(TautExpr::monomial(x.locus_, x.genus_, o.mono));
        const TautExpr inner = pulled * TautExpr::monomial(boundary_of(x.locus_), x.genus_, p.mono);
        out += (a * b) * TautExpr::push_from(inner);
      }
    }
  }
  return out;
}

bool operator==(const TautExpr& a, const TautExpr& b) {
  return a.locus_ == b.locus_ && a.genus_ == b.genus_ && a.terms_ == b.terms_;
}

std::string TautExpr::str() const {
  // by total degree, then theta before psi1 before psi2 ...
  std::vector<std::pair<Mono, RatPoly>> own_terms;
  for (const auto& [t, c] : terms_)
    if (t.stratum == Stratum::own) own_terms.emplace_back(t.mono, c);
  const auto degree = [](const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  };
  std::stable_sort(own_terms.begin(), own_terms.end(), [&](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first > b.first;
  });
  std::vector<std::pair<std::string, RatPoly>> own_parts;
  for (const auto& [m, c] : own_terms) own_parts.emplace_back(mono_str(m), c);
  std::string out = own_parts.empty() ? "" : join_terms(own_parts);
  const auto append = [&out](const std::string& piece) {
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  };
  bool any_pushed = false;
  for (const auto& [t, c] : terms_) any_pushed |= t.stratum == Stratum::pushed;
  if (any_pushed) append("iota_*(" + pushed_inner().str() + ")");
  const RatPoly d = deep_coeff();
  if (!d.is_zero()) append(join_terms({{"r_*[M04\\D]", d}}));
  return out.empty() ? "0" : out;
}

TautExpr pow(const TautExpr& x, unsigned k) {
  TautExpr out = TautExpr::scalar(x.locus(), x.genus(), RatPoly(1));
  for (unsigned i = 0; i < k; ++i) out = out * x;
  return out;
}

TautExpr weight_part(const TautExpr& x, int w) {
  TautExpr out(x.locus(), x.genus());
  for (const auto& [t, c] : x.terms())
    if (weight(t.mono) == w) out.add(t, c);
  return out;
}

std::map<int, TautExpr> n_weight(const TautExpr& x) {
  std::map<int, TautExpr> out;
  for (const auto& [t, c] : x.terms()) {
    auto it = out.try_emplace(weight(t.mono), x.locus(), x.genus()).first;
    it->second.add(t, c);
  }
  return out;
}

TautExpr psi_sum(Locus l, int g) { return TautExpr::gen(l, g, TautGen::psi1) + TautExpr::gen(l, g, TautGen::psi2); }

TautExpr boundary_pull(const TautExpr& x) {
  const Locus target = boundary_of(x.locus());
  const int g = x.genus();
  const TautExpr P = psi_sum(target, g);
  const TautExpr one = TautExpr::scalar(target, g, RatPoly(1));
  TautExpr images[kTautGens] = {one, one, one, one, one, one};
  if (target == Locus::boundary) images[0] = TautExpr::gen(target, g, TautGen::theta) + Rational(1, 2) * P;
  images[static_cast<int>(TautGen::delta)] = -P;
  TautExpr out(target, g);
  for (const auto& [t, c] : x.terms()) {
    if (t.stratum != Stratum::own) throw OutsideModel("pullback of a boundary pushforward");
    TautExpr term = TautExpr::scalar(target, g, c);
    for (int i = 0; i < kTautGens; ++i) {
      if (t.mono[i] == 0) continue;
      if (static_cast<TautGen>(i) == TautGen::kappa1) throw OutsideModel("boundary pullback of kappa1");
      term = term * pow(images[i], t.mono[i]);
    }
    out += term;
  }
  return out;
}

TautExpr restrict_open(const TautExpr& x) {
  if (x.locus() != Locus::total) throw InvalidArgument("restriction to J_g starts on the total space");
  TautExpr out(Locus::open, x.genus());
  for (const auto& [t, c] : x.terms()) {
    if (t.stratum != Stratum::own) continue;  // supported on the boundary
    if (t.mono[static_cast<int>(TautGen::delta)] > 0) continue;
    out.add(t, c);
  }
  return out;
}

bool factor_through(const TautExpr& x, const TautExpr& unit, RatPoly& p) {
  if (unit.is_zero()) throw InvalidArgument("factor through zero");
  if (x.locus() != unit.locus() || x.genus() != unit.genus()) return false;
  const auto& [t0, c0] = *unit.terms().begin();
  if (!c0.is_constant()) throw InvalidArgument("factor through a class with polynomial coefficients");
  auto it = x.terms().find(t0);
  p = it == x.terms().end() ? RatPoly() : it->second * RatPoly(c0.coeff(0).inverse());
  return p * unit == x;
}

}  // namespace beauville
