#include "beauville/lattice/mukai.hpp"

#include "beauville/error.hpp"

namespace beauville {

namespace {

int must_find(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == name) return static_cast<int>(k);
  }
  throw InvalidArgument("space has no class '" + name + "'");
}

DenseMat<Rational> zeros(int n) { return DenseMat<Rational>::Constant(n, n, Rational(0)); }

}  // namespace

MukaiSpace::MukaiSpace(std::vector<std::string> labels, DenseMat<Rational> gram, int genus)
    : labels_(std::move(labels)), gram_(std::move(gram)), genus_(genus) {
  const int n = dim();
  if (gram_.rows() != n || gram_.cols() != n) throw DimensionMismatch("gram size differs from label count");
  if (genus_ < 1) throw InvalidArgument("genus must be positive");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (labels_[i] == labels_[j]) throw InvalidArgument("duplicate label '" + labels_[i] + "'");
    }
  }
  alpha_ = must_find(labels_, "alpha");
  beta_ = must_find(labels_, "beta");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw InvalidArgument("gram is not symmetric");
    }
  }
  if (!gram_(alpha_, alpha_).is_zero() || !gram_(beta_, beta_).is_zero()) {
    throw InvalidArgument("alpha and beta must be isotropic");
  }
  if (gram_(alpha_, beta_) != Rational(-1)) throw InvalidArgument("(alpha, beta) must be -1");
  for (int k : middle()) {
    if (!gram_(alpha_, k).is_zero() || !gram_(beta_, k).is_zero()) {
      throw InvalidArgument("alpha, beta must be orthogonal to '" + labels_[k] + "'");
    }
  }
  const auto th = find("Theta");
  const auto hy = find("Hyp");
  if (th && hy) {
    if (!gram_(*th, *th).is_zero() || !gram_(*hy, *hy).is_zero() || gram_(*th, *hy) != Rational(1)) {
      throw InvalidArgument("Theta, Hyp must be an isotropic pair with (Theta, Hyp) = 1");
    }
  }
}

SpacePtr MukaiSpace::standard(int genus, const Rational& t, int extra) {
  if (t.is_zero()) throw InvalidArgument("square t must be nonzero");
  if (extra < 0) throw InvalidArgument("negative number of extra classes");
  std::vector<std::string> labels{"alpha", "Theta", "Hyp", "eta1", "eta2", "eta3", "eta4"};
  for (int k = 1; k <= extra; ++k) labels.push_back("x" + std::to_string(k));
  labels.push_back("beta");
  const int n = static_cast<int>(labels.size());
  DenseMat<Rational> g = zeros(n);
  g(0, n - 1) = g(n - 1, 0) = Rational(-1);
  g(1, 2) = g(2, 1) = Rational(1);
  for (int k = 3; k < n - 1; ++k) g(k, k) = t;
  return std::make_shared<const MukaiSpace>(labels, g, genus);
}

SpacePtr MukaiSpace::four_class(const Rational& t, int extra) {
  if (t.is_zero()) throw InvalidArgument("square t must be nonzero");
  if (extra < 0) throw InvalidArgument("negative number of extra classes");
  std::vector<std::string> labels{"alpha", "eta1", "eta2", "eta3", "eta4"};
  for (int k = 1; k <= extra; ++k) labels.push_back("x" + std::to_string(k));
  labels.push_back("beta");
  const int n = static_cast<int>(labels.size());
  DenseMat<Rational> g = zeros(n);
  g(0, n - 1) = g(n - 1, 0) = Rational(-1);
  for (int k = 1; k < n - 1; ++k) g(k, k) = t;
  return std::make_shared<const MukaiSpace>(labels, g, 2);
}

std::optional<int> MukaiSpace::find(const std::string& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == label) return static_cast<int>(k);
  }
  return std::nullopt;
}

int MukaiSpace::index(const std::string& label) const { return must_find(labels_, label); }

std::vector<int> MukaiSpace::middle() const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k) {
    if (k != alpha_ && k != beta_) out.push_back(k);
  }
  return out;
}

nlohmann::ordered_json MukaiSpace::to_json() const {
  nlohmann::ordered_json doc;
  doc["genus"] = genus_;
  doc["labels"] = labels_;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < dim(); ++j) row.push_back(gram_(i, j).str());
    rows.push_back(row);
  }
  doc["gram"] = rows;
  return doc;
}

SpacePtr MukaiSpace::from_json(const nlohmann::json& doc) {
  try {
    const auto labels = doc.at("labels").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    const auto& rows = doc.at("gram");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw DimensionMismatch("gram rows");
    DenseMat<Rational> g = zeros(n);
    for (int i = 0; i < n; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) throw DimensionMismatch("gram row length");
      for (int j = 0; j < n; ++j) {
        const auto& cell = rows[i][j];
        g(i, j) = cell.is_string() ? Rational::parse(cell.get<std::string>())
                                   : Rational(cell.get<long long>());
      }
    }
    return std::make_shared<const MukaiSpace>(labels, g, doc.at("genus").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed space document: ") + e.what());
  }
}

bool MukaiSpace::same_as(const MukaiSpace& other) const {
  return this == &other || (labels_ == other.labels_ && gram_ == other.gram_ && genus_ == other.genus_);
}

LatticeClass::LatticeClass(SpacePtr space, Vec<GaussianRational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
  if (!space_) throw InvalidArgument("class without a space");
  if (coords_.rows() != space_->dim()) throw DimensionMismatch("coordinate vector length");
}

LatticeClass LatticeClass::zero(SpacePtr space) {
  const int n = space->dim();
  return {std::move(space), Vec<GaussianRational>::Constant(n, GaussianRational(0))};
}

LatticeClass LatticeClass::basis(SpacePtr space, const std::string& label) {
  const int k = space->index(label);
  LatticeClass x = zero(std::move(space));
  x.coords_(k) = GaussianRational(1);
  return x;
}

LatticeClass LatticeClass::operator-() const {
  LatticeClass out = *this;
  for (int k = 0; k < out.coords_.rows(); ++k) out.coords_(k) = -out.coords_(k);
  return out;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& o) {
  require_same_space(*this, o);
  for (int k = 0; k < coords_.rows(); ++k) coords_(k) += o.coords_(k);
  return *this;
}

LatticeClass operator*(const GaussianRational& c, const LatticeClass& x) {
  LatticeClass out = x;
  for (int k = 0; k < out.coords_.rows(); ++k) out.coords_(k) *= c;
  return out;
}

bool operator==(const LatticeClass& a, const LatticeClass& b) {
  require_same_space(a, b);
  return a.coords_ == b.coords_;
}

bool LatticeClass::is_zero() const {
  for (int k = 0; k < coords_.rows(); ++k) {
    if (!coords_(k).is_zero()) return false;
  }
  return true;
}

std::string LatticeClass::str() const {
  std::string out;
  for (int k = 0; k < coords_.rows(); ++k) {
    const auto& c = coords_(k);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    std::string term;
    if (cs == "1") {
      term = space_->labels()[k];
    } else if (cs == "-1") {
      term = "-" + space_->labels()[k];
    } else {
      const bool wrap = detail::compound(cs);
      term = (wrap ? "(" + cs + ")" : cs) + "*" + space_->labels()[k];
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

void require_same_space(const LatticeClass& x, const LatticeClass& y) {
  if (!x.space()->same_as(*y.space())) throw InvalidArgument("classes live in different spaces");
}

GaussianRational pairing(const LatticeClass& x, const LatticeClass& y) {
  require_same_space(x, y);
  const auto& g = x.space()->gram();
  GaussianRational acc(0);
  for (int i = 0; i < g.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < g.cols(); ++j) {
      if (g(i, j).is_zero() || y[j].is_zero()) continue;
      acc += x[i] * GaussianRational(g(i, j)) * y[j];
    }
  }
  return acc;
}

Rational solve_lambda(const LatticeClass& a, const LatticeClass& h) {
  if (!square(h).is_zero()) throw InvalidArgument("H must be isotropic");
  const GaussianRational ah = pairing(a, h);
  const GaussianRational qa = square(a);
  if (!ah.is_real() || !qa.is_real()) throw InvalidArgument("lambda is only solved over Q");
  if (ah.is_zero()) throw InvalidArgument("no solution: (A, H) = 0");
  return -qa.re() / (Rational(2) * ah.re());
}

SparseMat<Rational> fourier_matrix(const MukaiSpace& space, int c0, int c1) {
  if ((c0 != 1 && c0 != -1) || (c1 != 1 && c1 != -1)) throw InvalidArgument("c0, c1 must be +1 or -1");
  if (space.genus() < 2) throw InvalidArgument("Fourier matrix needs genus >= 2");
  const int a = space.alpha();
  const int b = space.beta();
  const int th = space.index("Theta");
  const int hy = space.index("Hyp");
  const auto& g = space.gram();
  for (int k : space.middle()) {
    if (k == th || k == hy) continue;
    if (!g(k, th).is_zero() || !g(k, hy).is_zero()) {
      throw InvalidArgument("class '" + space.labels()[k] + "' is not orthogonal to Theta, Hyp");
    }
  }
  const Rational k = Rational(space.genus() + 1, 2);
  const Rational s0(c0);
  std::vector<Triplet<Rational>> t;
  // column = image of that basis vector
  t.emplace_back(th, a, -s0);
  t.emplace_back(b, a, s0 * k);
  t.emplace_back(hy, b, s0);
  t.emplace_back(a, th, s0);
  t.emplace_back(hy, th, -s0 * k);
  t.emplace_back(b, hy, -s0);
  for (int j : space.middle()) {
    if (j != th && j != hy) t.emplace_back(j, j, Rational(c1));
  }
  return sparse_from<Rational>(space.dim(), space.dim(), t);
}

LatticeClass apply(const SparseMat<Rational>& m, const LatticeClass& x) {
  if (m.cols() != x.space()->dim() || m.rows() != m.cols()) throw DimensionMismatch("matrix does not act on this space");
  Vec<GaussianRational> out = Vec<GaussianRational>::Constant(m.rows(), GaussianRational(0));
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    for (SparseMat<Rational>::InnerIterator it(m, j); it; ++it) {
      out(it.row()) += GaussianRational(it.value()) * x[static_cast<int>(it.col())];
    }
  }
  return {x.space(), out};
}

bool is_isometry(const MukaiSpace& space, const SparseMat<Rational>& m) {
  const DenseMat<Rational> d = dense_from(m);
  const DenseMat<Rational> lhs = d.transpose() * space.gram() * d;
  return lhs == space.gram();
}

}  // namespace beauville
