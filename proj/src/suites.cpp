#include "avmod/suites.hpp"

#include <string>
#include <vector>

#include "avmod/comb.hpp"
#include "avmod/format.hpp"
#include "avmod/random.hpp"

namespace avmod {

namespace {

void record(CheckResult& result, bool ok, const std::string& what) {
  ++result.checked;
  if (!ok && result.failed++ == 0) result.counterexample = what;
}

std::string tuple(const MultiIndex& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.dim(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

std::vector<VectorFieldGen> generators(std::size_t n, int lo, int hi) {
  std::vector<VectorFieldGen> gens;
  for (const auto& k : multi_indices_between(n, lo, hi)) {
    for (std::size_t p = 0; p < n; ++p) gens.emplace_back(k, p);
  }
  return gens;
}

std::string bounds_title(const std::string& what, std::size_t n, int max_deg) {
  return what + " (n = " + std::to_string(n) + ", max degree " + std::to_string(max_deg) + ")";
}

}  // namespace

VerificationReport lemma_suite(std::size_t n, int max_deg) {
  VerificationReport report;
  report.title = bounds_title("binomial identities", n, max_deg);
  CheckResult a("part (a)"), b("part (b)"), c("part (c)");
  const std::vector<MultiIndex> ks = multi_indices_between(n, 0, max_deg);
  for (const auto& k : ks) {
    record(a, lemma_comb_check(CombPart::a, k, k, 0), "k = " + tuple(k));
    for (const auto& l : ks) {
      for (std::size_t p = 0; p < n; ++p) {
        const std::string where = "k = " + tuple(k) + ", l = " + tuple(l) + ", p = " + std::to_string(p + 1);
        record(b, lemma_comb_check(CombPart::b, k, l, p), where);
        record(c, lemma_comb_check(CombPart::c, k, l, p), where);
      }
    }
  }
  report.checks = {a, b, c};
  return report;
}

VerificationReport hom_suite(std::size_t n, int max_deg, const IsoMaps& maps) {
  VerificationReport report;
  report.title = bounds_title("bracket preservation", n, max_deg);
  CheckResult l1("L1 [phi(xi), phi(eta)] = phi([xi, eta])");
  CheckResult l2("L2 [phi(eta), phi(f)] = phi(eta(f))");
  CheckResult l3("L3 [psi(xi), psi(eta)] = psi([xi, eta]) on L+");
  const std::vector<VectorFieldGen> gens = generators(n, 0, max_deg);
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      const std::string pair = "xi = " + gen_string(g) + ", eta = " + gen_string(h);
      record(l1, check_phi_hom(g, h, maps), pair);
      if (g.in_lplus() && h.in_lplus()) record(l3, check_psi_hom(g, h, maps), pair);
    }
    for (const auto& r : multi_indices_between(n, 0, max_deg)) {
      const Polynomial f = Polynomial::monomial(r);
      record(l2, check_phi_hom_function(g, f, maps), "eta = " + gen_string(g) + ", f = " + to_string(f));
    }
  }
  report.checks = {l1, l2, l3};
  return report;
}

VerificationReport roundtrip_suite(std::size_t n, int max_deg, std::size_t max_len, std::uint64_t seed,
                                   std::size_t count, const IsoMaps& maps) {
  VerificationReport report;
  report.title = bounds_title("inverse maps", n, max_deg) + ", max length " + std::to_string(max_len) + ", seed " +
                 std::to_string(seed);
  CheckResult functions("psi(phi(x^r # 1)) = x^r # 1");
  CheckResult fields("psi(phi(1 # x^k d_p)) = 1 # x^k d_p");
  CheckResult weyl("phi(psi(x^r d^s @ 1)) = x^r d^s @ 1");
  CheckResult lplus("phi(psi(1 @ x^k d_p)) = 1 @ x^k d_p");
  CheckResult smash_products("psi(phi(a)) = a on random products");
  CheckResult tensor_products("phi(psi(t)) = t on random products");

  const std::vector<MultiIndex> idx = multi_indices_between(n, 0, max_deg);
  for (const auto& r : idx) {
    const SmashElement a = SmashElement::from_poly(Polynomial::monomial(r));
    record(functions, check_roundtrip(a, maps), "a = " + to_string(a));
    for (const auto& s : idx) {
      const TensorElement t = TensorElement::tensor(WeylElement::word(r, s), EnvElement::unit(n, Restriction::lplus));
      record(weyl, check_roundtrip_tensor(t, maps), "t = " + to_string(t));
    }
  }
  for (const auto& g : generators(n, 0, max_deg)) {
    const SmashElement a = SmashElement::from_env(EnvElement::generator(g));
    record(fields, check_roundtrip(a, maps), "a = " + to_string(a));
    if (!g.in_lplus()) continue;
    const TensorElement t =
        TensorElement::tensor(WeylElement::scalar(n, 1), EnvElement::generator(g, Restriction::lplus));
    record(lplus, check_roundtrip_tensor(t, maps), "t = " + to_string(t));
  }

  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      const SmashElement a = random_smash_product(rng, n, max_deg, max_deg, max_len);
      record(smash_products, check_roundtrip(a, maps), "a = " + to_string(a));
    } else {
      const TensorElement t = random_tensor_product(rng, n, max_deg, std::max(1, max_deg), max_len);
      record(tensor_products, check_roundtrip_tensor(t, maps), "t = " + to_string(t));
    }
  }
  report.checks = {functions, fields, weyl, lplus, smash_products, tensor_products};
  return report;
}

VerificationReport multiplicativity_suite(std::size_t n, int max_deg, std::size_t max_len, std::uint64_t seed,
                                          std::size_t pairs, const IsoMaps& maps) {
  VerificationReport report;
  report.title = bounds_title("multiplicativity", n, max_deg) + ", max length " + std::to_string(max_len) +
                 ", seed " + std::to_string(seed);
  CheckResult phi_mul("phi(ab) = phi(a)phi(b)");
  CheckResult psi_mul("psi(st) = psi(s)psi(t)");
  Rng rng(seed);
  for (std::size_t i = 0; i < pairs; ++i) {
    const SmashElement a = random_smash_product(rng, n, max_deg, max_deg, max_len);
    const SmashElement b = random_smash_product(rng, n, max_deg, max_deg, max_len);
    record(phi_mul, maps.phi(a * b) == maps.phi(a) * maps.phi(b), "a = " + to_string(a) + ", b = " + to_string(b));
    const TensorElement s = random_tensor_product(rng, n, max_deg, std::max(1, max_deg), max_len);
    const TensorElement t = random_tensor_product(rng, n, max_deg, std::max(1, max_deg), max_len);
    record(psi_mul, maps.psi(s * t) == maps.psi(s) * maps.psi(t), "s = " + to_string(s) + ", t = " + to_string(t));
  }
  report.checks = {phi_mul, psi_mul};
  return report;
}

}  // namespace avmod
