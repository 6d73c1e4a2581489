#include "avmod/gauge.hpp"

#include <set>
#include <utility>

#include "avmod/errors.hpp"
#include "avmod/random.hpp"
#include "avmod/smash.hpp"

namespace avmod {

ModuleElement::ModuleElement(std::size_t n, std::size_t rank) : n_(n), coords_(rank, Polynomial(n)) {
  if (rank == 0) throw SpecError("ModuleElement: rank must be positive");
}

ModuleElement ModuleElement::frame(std::size_t n, std::size_t rank, std::size_t j) {
  if (j >= rank) throw DimensionError("ModuleElement::frame: index out of range");
  ModuleElement m(n, rank);
  m.coords_[j] = Polynomial::constant(n, 1);
  return m;
}

ModuleElement ModuleElement::from_coords(std::vector<Polynomial> coords) {
  if (coords.empty()) throw SpecError("ModuleElement: rank must be positive");
  ModuleElement m(coords.front().dim(), coords.size());
  for (const auto& c : coords) require_same_dim(m.n_, c.dim(), "ModuleElement::from_coords");
  m.coords_ = std::move(coords);
  return m;
}

bool ModuleElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  require_same_dim(n_, other.n_, "ModuleElement::operator+=");
  require_same_dim(rank(), other.rank(), "ModuleElement::operator+= (rank)");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  require_same_dim(n_, other.n_, "ModuleElement::operator-=");
  require_same_dim(rank(), other.rank(), "ModuleElement::operator-= (rank)");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ModuleElement operator*(const PolyMatrix& a, const ModuleElement& m) {
  require_same_dim(a.dim(), m.dim(), "PolyMatrix * ModuleElement");
  require_same_dim(a.rank(), m.rank(), "PolyMatrix * ModuleElement (rank)");
  std::vector<Polynomial> out(m.rank(), Polynomial(m.dim()));
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (!a(i, j).is_zero() && !m[j].is_zero()) out[i] += a(i, j) * m[j];
    }
  }
  return ModuleElement::from_coords(std::move(out));
}

ModuleElement operator*(const Polynomial& f, const ModuleElement& m) {
  require_same_dim(f.dim(), m.dim(), "Polynomial * ModuleElement");
  std::vector<Polynomial> out;
  out.reserve(m.rank());
  for (const auto& c : m.coords()) out.push_back(f * c);
  return ModuleElement::from_coords(std::move(out));
}

ModuleElement module_partial(const ModuleElement& m, std::size_t i) {
  std::vector<Polynomial> out;
  out.reserve(m.rank());
  for (const auto& c : m.coords()) out.push_back(poly_partial(c, i));
  return ModuleElement::from_coords(std::move(out));
}

std::string to_string(const ModuleElement& m) {
  std::string s = "(";
  for (std::size_t j = 0; j < m.rank(); ++j) {
    if (j) s += ", ";
    s += to_string(m[j]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const ModuleElement& m) { return os << to_string(m); }

void GaugeModuleSpec::validate() const {
  if (n == 0) throw SpecError("gauge spec: n must be positive");
  if (rank == 0) throw SpecError("gauge spec: rank must be positive");
  if (B.size() != n) {
    throw SpecError("gauge spec: expected " + std::to_string(n) + " gauge fields, got " + std::to_string(B.size()));
  }
  auto check_matrix = [&](const PolyMatrix& m, const std::string& what) {
    if (m.dim() != n) throw SpecError("gauge spec: " + what + " has dimension " + std::to_string(m.dim()));
    if (m.rank() != rank) throw SpecError("gauge spec: " + what + " has rank " + std::to_string(m.rank()));
  };
  for (std::size_t i = 0; i < n; ++i) check_matrix(B[i], "B_" + std::to_string(i + 1));
  for (const auto& [g, m] : rho) {
    if (g.dim() != n) throw SpecError("gauge spec: rho key " + gen_string(g) + " has the wrong dimension");
    if (!g.in_lplus()) throw SpecError("gauge spec: rho key " + gen_string(g) + " is not in L+");
    check_matrix(m, "rho(" + gen_string(g) + ")");
  }
}

PolyMatrix GaugeModuleSpec::rho_of(const VectorFieldGen& g) const {
  if (!g.in_lplus()) throw LplusError("rho: generator " + gen_string(g) + " is not in L+");
  const auto it = rho.find(g);
  return it == rho.end() ? PolyMatrix(n, rank) : it->second;
}

int GaugeModuleSpec::max_support_degree() const {
  int d = -1;
  for (const auto& [g, m] : rho) d = std::max(d, g.degree());
  return d;
}

GaugeModuleSpec gauge_trivial(std::size_t n, std::size_t rank) {
  GaugeModuleSpec spec;
  spec.n = n;
  spec.rank = rank;
  spec.B.assign(n, PolyMatrix(n, rank));
  return spec;
}

GaugeModuleSpec gauge_adjoint(std::size_t n) {
  GaugeModuleSpec spec = gauge_trivial(n, n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) {
      PolyMatrix m(n, n);
      m.at(p, q) = Polynomial::constant(n, -1);
      spec.rho.emplace(VectorFieldGen(MultiIndex::unit(n, q), p), std::move(m));
    }
  }
  return spec;
}

ModuleElement covariant_partial(const GaugeModuleSpec& spec, std::size_t i, const ModuleElement& m) {
  return module_partial(m, i) + spec.B.at(i) * m;
}

ModuleElement rho_act(const GaugeModuleSpec& spec, const VectorFieldGen& g, const ModuleElement& m) {
  if (!g.in_lplus()) throw LplusError("rho: generator " + gen_string(g) + " is not in L+");
  const auto it = spec.rho.find(g);
  return it == spec.rho.end() ? ModuleElement(m.dim(), m.rank()) : it->second * m;
}

ModuleElement gauge_act(const GaugeModuleSpec& spec, const VectorField& eta, const ModuleElement& m) {
  require_same_dim(spec.n, eta.dim(), "gauge_act");
  require_same_dim(spec.n, m.dim(), "gauge_act");
  require_same_dim(spec.rank, m.rank(), "gauge_act (rank)");
  ModuleElement out(spec.n, spec.rank);
  for (const auto& [g, c] : eta.terms()) {
    const Polynomial f = Polynomial::monomial(g.k, c);
    out += f * covariant_partial(spec, g.dir, m);
    // Only the support contributes; every other x^k d_i acts as zero.
    for (const auto& [xi, mat] : spec.rho) {
      if (xi.dir != g.dir) continue;
      const Polynomial dkf = poly_partial(f, xi.k);
      if (dkf.is_zero()) continue;
      out += poly_scale(dkf, Rational(1) / Rational(mi_factorial(xi.k))) * (mat * m);
    }
  }
  return out;
}

ModuleElement gauge_act_tensor(const GaugeModuleSpec& spec, const TensorElement& t, const ModuleElement& m) {
  require_same_dim(spec.n, t.dim(), "gauge_act_tensor");
  ModuleElement out(spec.n, spec.rank);
  for (const auto& [key, c] : t.terms()) {
    ModuleElement v = m;
    for (auto it = key.w.gens.rbegin(); it != key.w.gens.rend(); ++it) v = rho_act(spec, *it, v);
    for (std::size_t i = spec.n; i-- > 0;) {
      for (int e = 0; e < key.d.s[i]; ++e) v = covariant_partial(spec, i, v);
    }
    out += Polynomial::monomial(key.d.r, c) * v;
  }
  return out;
}

bool check_phi_transport(const GaugeModuleSpec& spec, const VectorField& eta, const ModuleElement& m) {
  const TensorElement image = phi(SmashElement::from_env(EnvElement::from_vector_field(eta)));
  return gauge_act(spec, eta, m) == gauge_act_tensor(spec, image, m);
}

const char* const kCompositionConvention =
    "matrices act on coordinate columns; in a composite the operator nearest the element applies first";

namespace {

void record(CheckResult& result, bool ok, const std::string& what, const std::optional<PolyMatrix>& residual = {}) {
  ++result.checked;
  if (ok) return;
  if (result.failed++ == 0) {
    result.counterexample = what;
    result.residual = residual;
  }
}

PolyMatrix rho_of_field(const GaugeModuleSpec& spec, const VectorField& v) {
  PolyMatrix out(spec.n, spec.rank);
  for (const auto& [g, c] : v.terms()) {
    const auto it = spec.rho.find(g);
    if (it != spec.rho.end()) out += matrix_scale(it->second, c);
  }
  return out;
}

std::vector<VectorFieldGen> generators_between(std::size_t n, int lo_total, int hi_total) {
  std::vector<VectorFieldGen> gens;
  if (hi_total < lo_total) return gens;
  for (const auto& k : multi_indices_between(n, lo_total, hi_total)) {
    for (std::size_t p = 0; p < n; ++p) gens.emplace_back(k, p);
  }
  return gens;
}

std::string rho_name(const VectorFieldGen& g) { return "rho(" + gen_string(g) + ")"; }

ModuleElement random_module_element(Rng& rng, const GaugeModuleSpec& spec, int max_deg) {
  std::vector<Polynomial> coords;
  for (std::size_t j = 0; j < spec.rank; ++j) coords.push_back(random_poly(rng, spec.n, max_deg, 2));
  return ModuleElement::from_coords(std::move(coords));
}

}  // namespace

VerificationReport gauge_verify(const GaugeModuleSpec& spec) {
  spec.validate();
  VerificationReport report;
  report.convention = kCompositionConvention;
  report.title = "gauge verify (n = " + std::to_string(spec.n) + ", rank = " + std::to_string(spec.rank) + ")";

  CheckResult gf1{"GF1 flatness"};
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      const PolyMatrix r = matrix_partial(spec.B[j], i) - matrix_partial(spec.B[i], j) +
                           matrix_commutator(spec.B[i], spec.B[j]);
      const std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
      record(gf1, r.is_zero(), "d_x" + si + " B_" + sj + " - d_x" + sj + " B_" + si + " + [B_" + si + ", B_" + sj + "] != 0", r);
    }
  }
  report.checks.push_back(std::move(gf1));

  CheckResult gf2{"GF2 commutation with rho"};
  for (const auto& [xi, m] : spec.rho) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      const PolyMatrix r = matrix_partial(m, i) + matrix_commutator(spec.B[i], m);
      const std::string si = std::to_string(i + 1);
      record(gf2, r.is_zero(), "d_x" + si + " " + rho_name(xi) + " + [B_" + si + ", " + rho_name(xi) + "] != 0", r);
    }
  }
  report.checks.push_back(std::move(gf2));

  // Pairs below the degree bound, plus every pair of support generators: two
  // supported generators can bracket past the bound, where rho vanishes.
  CheckResult hom{"rho is a Lie homomorphism"};
  const int dmax = spec.max_support_degree();
  const std::vector<VectorFieldGen> gens = generators_between(spec.n, 1, dmax + 1);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const bool both_supported = spec.rho.contains(gens[a]) && spec.rho.contains(gens[b]);
      if (gens[a].degree() + gens[b].degree() <= dmax || both_supported) pairs.emplace(a, b);
    }
  }
  for (const auto& [a, b] : pairs) {
    const PolyMatrix r = rho_of_field(spec, gen_bracket(gens[a], gens[b])) -
                         matrix_commutator(spec.rho_of(gens[a]), spec.rho_of(gens[b]));
    record(hom, r.is_zero(),
           "rho([" + gen_string(gens[a]) + ", " + gen_string(gens[b]) + "]) - [" + rho_name(gens[a]) + ", " +
               rho_name(gens[b]) + "] != 0",
           r);
  }
  report.checks.push_back(std::move(hom));
  return report;
}

VerificationReport check_module_axioms(const GaugeModuleSpec& spec, int degree_bound, std::uint64_t seed) {
  spec.validate();
  VerificationReport report;
  report.convention = kCompositionConvention;
  report.title = "module axioms (degree bound " + std::to_string(degree_bound) + ", seed " + std::to_string(seed) + ")";
  const std::size_t n = spec.n;
  const std::vector<VectorFieldGen> gens = generators_between(n, 0, degree_bound + 1);
  std::vector<ModuleElement> frame;
  for (std::size_t j = 0; j < spec.rank; ++j) frame.push_back(ModuleElement::frame(n, spec.rank, j));
  const std::vector<MultiIndex> monomials = multi_indices_between(n, 0, 2);

  CheckResult leibniz{"Leibniz rule"};
  CheckResult lie{"Lie action"};
  auto check_leibniz = [&](const VectorField& eta, const Polynomial& f, const ModuleElement& m) {
    const ModuleElement lhs = gauge_act(spec, eta, f * m);
    const ModuleElement rhs = f * gauge_act(spec, eta, m) + vf_apply(eta, f) * m;
    record(leibniz, lhs == rhs,
           "eta = " + to_string(eta) + ", f = " + to_string(f) + ", m = " + to_string(m) + ": eta(f m) = " +
               to_string(lhs) + " but f (eta m) + eta(f) m = " + to_string(rhs));
  };
  auto check_lie = [&](const VectorField& xi, const VectorField& eta, const ModuleElement& m) {
    const ModuleElement lhs = gauge_act(spec, vf_bracket(xi, eta), m);
    const ModuleElement rhs = gauge_act(spec, xi, gauge_act(spec, eta, m)) - gauge_act(spec, eta, gauge_act(spec, xi, m));
    record(lie, lhs == rhs,
           "xi = " + to_string(xi) + ", eta = " + to_string(eta) + ", m = " + to_string(m) + ": [xi, eta] m = " +
               to_string(lhs) + " but xi(eta m) - eta(xi m) = " + to_string(rhs));
  };

  for (const auto& g : gens) {
    const VectorField eta = VectorField::generator(g);
    for (const auto& e : frame) {
      for (const auto& r : monomials) check_leibniz(eta, Polynomial::monomial(r), e);
    }
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const VectorField xi = VectorField::generator(gens[a]), eta = VectorField::generator(gens[b]);
      for (const auto& e : frame) check_lie(xi, eta, e);
    }
  }

  Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const VectorField xi = random_vector_field(rng, n, degree_bound + 1, 3);
    const VectorField eta = random_vector_field(rng, n, degree_bound + 1, 3);
    const Polynomial f = random_poly(rng, n, 2, 3);
    const ModuleElement m = random_module_element(rng, spec, 2);
    check_leibniz(eta, f, m);
    check_lie(xi, eta, m);
  }
  report.checks.push_back(std::move(leibniz));
  report.checks.push_back(std::move(lie));
  return report;
}

VerificationReport check_phi_transport_suite(const GaugeModuleSpec& spec, int max_k, std::uint64_t seed) {
  spec.validate();
  VerificationReport report;
  report.convention = kCompositionConvention;
  report.title = "phi transport (|k| <= " + std::to_string(max_k) + ", seed " + std::to_string(seed) + ")";
  CheckResult transport{"V-action equals the action of phi through theta and rho"};
  std::vector<ModuleElement> elements;
  for (std::size_t j = 0; j < spec.rank; ++j) elements.push_back(ModuleElement::frame(spec.n, spec.rank, j));
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) elements.push_back(random_module_element(rng, spec, 2));
  for (const auto& g : generators_between(spec.n, 0, max_k)) {
    const VectorField eta = VectorField::generator(g);
    for (const auto& m : elements) {
      record(transport, check_phi_transport(spec, eta, m), "eta = " + gen_string(g) + ", m = " + to_string(m));
    }
  }
  report.checks.push_back(std::move(transport));
  return report;
}

}  // namespace avmod
