#include "macp/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace macp {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

using Runner = std::function<void(int, const SuiteOptions&, SuiteReport&)>;

void check(SuiteReport& r, bool ok, const std::string& witness) {
  ++r.checked;
  if (!ok) r.fail(witness);
}

void suite_axioms(int n, const SuiteOptions&, SuiteReport& r) {
  for (const auto& m : enumerate_rank2(n)) {
    const auto cov = covectors(m);
    check(r, !validate_covector_axioms(cov), "covector axioms: " + m.key());
    check(r, !validate_grassmann_plucker(m.chirotope()), "grassmann-plucker: " + m.key());
    check(r, !check_basis_orientation(m), "basis orientation: " + m.key());
    check(r, static_cast<int>(cov.size()) == 4 * m.num_classes() + 1, "covector count: " + m.key());
    check(r, canonical_form(chirotope_from_vectors(realize(m))) == m, "realization round trip: " + m.key());
    std::vector<SignVector> minimal;
    for (const auto& x : cov) {
      if (x.is_zero()) continue;
      const bool min_support = std::none_of(cov.begin(), cov.end(), [&](const SignVector& y) {
        return !y.is_zero() && y.support() != x.support() && (y.support() & ~x.support()) == 0;
      });
      if (min_support) minimal.push_back(x);
    }
    check(r, minimal == cocircuits(m), "cocircuits: " + m.key());
  }
}

void suite_covers(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.comparator = WeakOrderTest::Covector, .threads = o.threads});
  for (int i = 0; i < macp.poset.size(); ++i) {
    std::vector<Rank2OM> brute;
    for (int c : macp.poset.cocovers(i)) brute.push_back(macp.elements[static_cast<std::size_t>(c)]);
    std::sort(brute.begin(), brute.end());
    check(r, brute == coatoms_CR(macp.elements[static_cast<std::size_t>(i)]), "covers: " + macp.poset.label(i));
  }
  r.details["elements"] = macp.elements.size();
  r.details["hasse_edges"] = macp.poset.hasse().size();
}

void suite_comparator(int n, const SuiteOptions&, SuiteReport& r) {
  const auto el = enumerate_rank2(n);
  for (const auto& a : el)
    for (const auto& b : el) check(r, weak_leq(a, b) == weak_leq_chirotope(a, b), a.key() + " vs " + b.key());
}

void suite_rank(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.threads = o.threads});
  const auto heights = height_ranks(macp.poset);
  check(r, heights.has_value(), "MacP(2,n) is not graded");
  if (!heights) return;
  for (int i = 0; i < macp.poset.size(); ++i)
    check(r, (*heights)[static_cast<std::size_t>(i)] == macp.rank[static_cast<std::size_t>(i)],
          "rank: " + macp.poset.label(i));
  r.details["f_vector"] = macp.f_vector();
}

void suite_thin(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.threads = o.threads});
  for (const auto& m : macp.elements) {
    const auto v = is_thin(lower_interval(macp, m));
    check(r, !v, "thin: " + m.key() + (v ? " " + v->detail : ""));
  }
}

void suite_semimodular(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.threads = o.threads});
  const Poset& p = macp.poset;
  for (int w = 0; w < p.size(); ++w)
    for (auto t = p.up_set(w).find_first(); t != Bitset::npos; t = p.up_set(w).find_next(t)) {
      const auto v = is_totally_semimodular(interval(p, w, static_cast<int>(t)));
      check(r, !v, "[" + p.label(w) + ", " + p.label(static_cast<int>(t)) + "]" + (v ? " " + v->detail : ""));
    }
}

void suite_rao(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.threads = o.threads});
  for (const auto& m : macp.elements) {
    const Poset lower = lower_interval(macp, m);
    const auto realization = sample_cell(m, 1, o.seed).front().columns();
    const auto order = to_atom_ordering(lower, rao_ordering(m, realization));
    check(r, verify_recursive_atom_ordering(lower, order, o.budget), "rao: " + m.key());
  }
}

void suite_spheres(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto macp = enumerate_macp2(n, {.threads = o.threads});
  for (const auto& m : macp.elements) {
    const int h = rank_h(m);
    if (h < 1 || h > 4) continue;
    const auto k = order_complex(lower_interval(macp, m).proper_part());
    check(r, is_sphere_profile(k, h - 1), "sphere: " + m.key());
  }
}

void suite_rp(int n, const SuiteOptions&, SuiteReport& r) {
  const auto profile = betti_gf2(order_complex(enumerate_macp1(n)));
  check(r, profile.betti == std::vector<long long>(static_cast<std::size_t>(n), 1), "Betti profile of RP^(n-1)");
  check(r, profile.euler_consistent, "Euler-Poincare identity");
  r.details["betti"] = profile.betti;
  r.details["f_vector"] = profile.f_vector;
}

void suite_cells(int n, const SuiteOptions& o, SuiteReport& r) {
  for (const auto& m : enumerate_rank2(n)) {
    for (const auto& x : sample_cell(m, o.samples, o.seed)) check(r, mu(x) == m, "cell sample: " + m.key());
    for (const auto& face : coatoms_CR(m)) {
      const auto report = sample_boundary(m, face, std::max(1, o.samples / 5), o.seed);
      r.checked += report.perturbations;
      if (report.failures) r.fail("boundary: " + face.key() + " -> " + m.key());
    }
  }
}

// f0 <= f1 <=> iota(f0) <= iota(f1) on the upper interval above each base
// flag, injectively and onto the upper interval of iota(base).
void check_embedding(const MacP12Poset& flags, const MacP2Poset& big, SuiteReport& r) {
  const Poset& p = flags.poset;
  for (int b = 0; b < p.size(); ++b) {
    const FlagOM& base = flags.elements[static_cast<std::size_t>(b)];
    if (base.M().chi(0, 1) == Sign::Zero) continue;
    const Rank2OM base_image = iota_embed(base);
    const SignVector anchor = iota_sign_choice(base);
    std::vector<int> upper;
    for (auto f = p.up_set(b).find_first(); f != Bitset::npos; f = p.up_set(b).find_next(f))
      upper.push_back(static_cast<int>(f));
    std::vector<int> images;
    for (int f : upper) images.push_back(big.index_of(iota_embed(flags.elements[static_cast<std::size_t>(f)], anchor)));
    for (std::size_t a = 0; a < upper.size(); ++a)
      for (std::size_t c = 0; c < upper.size(); ++c)
        check(r, p.leq(upper[a], upper[c]) == big.poset.leq(images[a], images[c]),
              "order: " + p.label(upper[a]) + " vs " + p.label(upper[c]) + " above " + base.key());
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    check(r, std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "injective above " + base.key());
    const int root = big.index_of(base_image);
    check(r, static_cast<std::size_t>(big.poset.up_set(root).count()) == sorted.size() && sorted.front() == root,
          "onto the upper interval above " + base.key());
  }
}

void suite_flags(int n, const SuiteOptions& o, SuiteReport& r) {
  const auto flags = enumerate_macp12(n, {.threads = o.threads});
  const auto heights = height_ranks(flags.poset);
  check(r, heights.has_value(), "MacP(1,2,n) is not graded");
  for (std::size_t i = 0; i < flags.elements.size(); ++i) {
    const FlagOM& f = flags.elements[i];
    if (heights) check(r, (*heights)[i] == flags.rank[i], "flag rank: " + f.key());
    const Poset lower = flag_lower_interval(flags, f);
    check(r, !is_thin(lower), "flag thin: " + f.key());
    const int d = flags.rank[i];
    if (d >= 1) check(r, is_sphere_profile(order_complex(lower.proper_part()), d - 1), "flag sphere: " + f.key());
    const auto realization = sample_cell(f.M(), 1, o.seed).front().columns();
    check(r, verify_recursive_atom_ordering(lower, to_atom_ordering(lower, flag_rao_ordering(f, realization)), o.budget),
          "flag rao: " + f.key());
    for (const auto& [y, x] : sample_flag_cell(f, std::max(1, o.samples / 5), o.seed))
      check(r, nu(y, x) == f, "flag cell sample: " + f.key());
    for (int c : flags.poset.cocovers(static_cast<int>(i))) {
      const auto report = sample_flag_boundary(f, flags.elements[static_cast<std::size_t>(c)], 1, o.seed);
      r.checked += report.perturbations;
      if (report.failures) r.fail("flag boundary: " + flags.elements[static_cast<std::size_t>(c)].key() + " -> " + f.key());
    }
  }
  if (n + 1 <= 5) check_embedding(flags, enumerate_macp2(n + 1, {.threads = o.threads}), r);
  r.details["elements"] = flags.elements.size();
  r.details["f_vector"] = flags.f_vector();
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"axioms", suite_axioms},   {"covers", suite_covers},         {"comparator", suite_comparator},
      {"rank", suite_rank},       {"thin", suite_thin},             {"semimodular", suite_semimodular},
      {"rao", suite_rao},         {"spheres", suite_spheres},       {"rp", suite_rp},
      {"cells", suite_cells},     {"flags-all", suite_flags},
  };
  return table;
}

}  // namespace

void SuiteReport::fail(std::string witness) {
  ++failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, runner] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, int n, const SuiteOptions& options) {
  const auto it = runners().find(name);
  if (it == runners().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  report.n = n;
  it->second(n, options, report);
  return report;
}

Json to_json(const SuiteReport& report) {
  return Json{{"suite", report.suite},   {"n", report.n},          {"passed", report.passed()},
              {"checked", report.checked}, {"failed", report.failed}, {"witnesses", report.witnesses},
              {"details", report.details}};
}

}  // namespace macp
