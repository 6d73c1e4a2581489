#include "avmod/fuzz.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "avmod/errors.hpp"
#include "avmod/random.hpp"

namespace avmod {

namespace {

struct Bounds {
  int max_deg;
  std::size_t max_len;
};

using Inputs = std::vector<std::string>;

// Returns the printed inputs when the property fails.
using Property = std::function<std::optional<Inputs>(Rng&, std::size_t, Bounds, const IsoMaps&)>;

std::uint64_t stream_seed(std::uint64_t seed, std::size_t iteration) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(iteration) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SmashElement sample_smash(Rng& rng, std::size_t n, Bounds b) {
  return random_smash_product(rng, n, b.max_deg, b.max_deg, b.max_len);
}

TensorElement sample_tensor(Rng& rng, std::size_t n, Bounds b) {
  return random_tensor_product(rng, n, b.max_deg, std::max(1, b.max_deg), b.max_len);
}

const std::vector<std::pair<std::string, Property>>& properties() {
  static const std::vector<std::pair<std::string, Property>> table = {
      {"L1 phi preserves brackets of vector fields",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const VectorFieldGen g1 = random_gen(rng, n, 0, b.max_deg), g2 = random_gen(rng, n, 0, b.max_deg);
         if (check_phi_hom(g1, g2, maps)) return std::nullopt;
         return Inputs{"xi = " + gen_string(g1), "eta = " + gen_string(g2)};
       }},
      {"L2 phi preserves brackets with functions",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const VectorFieldGen g = random_gen(rng, n, 0, b.max_deg);
         const Polynomial f = random_poly(rng, n, b.max_deg, 3);
         if (check_phi_hom_function(g, f, maps)) return std::nullopt;
         return Inputs{"eta = " + gen_string(g), "f = " + to_string(f)};
       }},
      {"L3 psi preserves brackets in L+",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const int hi = std::max(1, b.max_deg);
         const VectorFieldGen g1 = random_gen(rng, n, 1, hi), g2 = random_gen(rng, n, 1, hi);
         if (check_psi_hom(g1, g2, maps)) return std::nullopt;
         return Inputs{"xi = " + gen_string(g1), "eta = " + gen_string(g2)};
       }},
      {"psi(phi(a)) = a",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const SmashElement a = sample_smash(rng, n, b);
         if (check_roundtrip(a, maps)) return std::nullopt;
         return Inputs{"a = " + to_string(a)};
       }},
      {"phi(psi(t)) = t",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const TensorElement t = sample_tensor(rng, n, b);
         if (check_roundtrip_tensor(t, maps)) return std::nullopt;
         return Inputs{"t = " + to_string(t)};
       }},
      {"phi(ab) = phi(a)phi(b)",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const SmashElement x = sample_smash(rng, n, b), y = sample_smash(rng, n, b);
         if (maps.phi(x * y) == maps.phi(x) * maps.phi(y)) return std::nullopt;
         return Inputs{"a = " + to_string(x), "b = " + to_string(y)};
       }},
      {"psi(st) = psi(s)psi(t)",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps& maps) -> std::optional<Inputs> {
         const TensorElement s = sample_tensor(rng, n, b), t = sample_tensor(rng, n, b);
         if (maps.psi(s * t) == maps.psi(s) * maps.psi(t)) return std::nullopt;
         return Inputs{"s = " + to_string(s), "t = " + to_string(t)};
       }},
      {"(ab)c = a(bc) in A # U(V)",
       [](Rng& rng, std::size_t n, Bounds b, const IsoMaps&) -> std::optional<Inputs> {
         const SmashElement x = sample_smash(rng, n, b), y = sample_smash(rng, n, b), z = sample_smash(rng, n, b);
         if ((x * y) * z == x * (y * z)) return std::nullopt;
         return Inputs{"a = " + to_string(x), "b = " + to_string(y), "c = " + to_string(z)};
       }},
  };
  return table;
}

std::optional<Inputs> run_once(const Property& prop, const FuzzConfig& config, std::size_t iteration, Bounds b,
                               const IsoMaps& maps) {
  Rng rng(stream_seed(config.seed, iteration));
  return prop(rng, config.n, b, maps);
}

}  // namespace

const std::vector<std::string>& fuzz_properties() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, prop] : properties()) out.push_back(name);
    return out;
  }();
  return names;
}

FuzzReport fuzz(const FuzzConfig& config, const IsoMaps& maps) {
  if (config.n == 0) throw DimensionError("fuzz: dimension must be positive");
  if (config.max_deg < 0) throw std::invalid_argument("fuzz: max_deg must be non-negative");
  const auto& table = properties();
  FuzzReport report;
  report.config = config;
  for (const auto& [name, prop] : table) report.checked.emplace_back(name, 0);

  for (std::size_t i = 0; i < config.iterations; ++i) {
    const std::size_t which = i % table.size();
    const Property& prop = table[which].second;
    ++report.checked[which].second;
    Bounds bounds{config.max_deg, config.max_len};
    std::optional<Inputs> failed = run_once(prop, config, i, bounds, maps);
    if (!failed) continue;
    if (report.failures++ > 0) continue;

    // Shrink coordinate-wise: each bound goes down while the failure persists.
    for (;;) {
      bool progressed = false;
      if (bounds.max_deg > 0) {
        const Bounds smaller{bounds.max_deg - 1, bounds.max_len};
        if (auto again = run_once(prop, config, i, smaller, maps)) {
          bounds = smaller;
          failed = std::move(again);
          progressed = true;
        }
      }
      if (bounds.max_len > 0) {
        const Bounds smaller{bounds.max_deg, bounds.max_len - 1};
        if (auto again = run_once(prop, config, i, smaller, maps)) {
          bounds = smaller;
          failed = std::move(again);
          progressed = true;
        }
      }
      if (!progressed) break;
    }
    report.first_failures.push_back({table[which].first, i, bounds.max_deg, bounds.max_len, std::move(*failed)});
  }
  return report;
}

std::string to_text(const FuzzReport& report) {
  const FuzzConfig& c = report.config;
  std::ostringstream os;
  os << "fuzz n=" << c.n << " max-deg=" << c.max_deg << " max-len=" << c.max_len << " iterations=" << c.iterations
     << " seed=" << c.seed << "\n";
  for (const auto& [name, count] : report.checked) os << "  " << name << ": " << count << " checked\n";
  os << "failures: " << report.failures << "\n";
  for (const auto& f : report.first_failures) {
    os << "first failure: " << f.property << " at iteration " << f.iteration << "\n";
    os << "  shrunk to max-deg=" << f.max_deg << " max-len=" << f.max_len << "\n";
    for (const auto& input : f.inputs) os << "  " << input << "\n";
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_to_json(const FuzzReport& report) {
  using nlohmann::json;
  const FuzzConfig& c = report.config;
  json doc = {{"n", c.n},           {"max_deg", c.max_deg}, {"max_len", c.max_len},
              {"iterations", c.iterations}, {"seed", c.seed}, {"failures", report.failures},
              {"passed", report.passed()}};
  doc["checked"] = json::array();
  for (const auto& [name, count] : report.checked) doc["checked"].push_back({{"property", name}, {"count", count}});
  doc["first_failure"] = nullptr;
  for (const auto& f : report.first_failures) {
    doc["first_failure"] = {{"property", f.property}, {"iteration", f.iteration}, {"max_deg", f.max_deg},
                            {"max_len", f.max_len},   {"inputs", f.inputs}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace avmod
