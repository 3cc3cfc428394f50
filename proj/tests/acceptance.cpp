// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only k   run criterion k
//
// Exit status is 0 when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "macp/flags.hpp"
#include "macp/homology.hpp"
#include "macp/macphersonian.hpp"
#include "oracles.hpp"

using namespace macp;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  long long checked = 0;
  long long failures = 0;
  std::string witness;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failures;
    pass = false;
    if (witness.empty()) witness = what;
  }
};

constexpr std::uint64_t kSeed = 20240611;
constexpr int kSamples = 25;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// ------------------------------------------------------------------ 1
void cover_rules(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    const auto macp = enumerate_macp2(n, {.comparator = WeakOrderTest::Covector});
    const Poset& p = macp.poset;
    for (int y = 0; y < p.size(); ++y) {
      std::set<std::string> brute;
      for (int x = 0; x < p.size(); ++x)
        if (x != y && p.leq(x, y) && (p.up_set(x) & p.down_set(y)).count() == 2) brute.insert(p.label(x));
      std::set<std::string> rules;
      for (const auto& c : coatoms_CR(macp.elements[at(y)])) rules.insert(c.key());
      o.expect(brute == rules, "covers of " + p.label(y));
    }
  }
  o.detail << "n=3..5";
}

// ------------------------------------------------------------------ 2
void rank_formula(Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    const auto macp = enumerate_macp2(n, {.comparator = WeakOrderTest::Covector});
    const Poset& p = macp.poset;
    const auto height = oracle::longest_chain_heights(p.size(), [&](int a, int b) { return p.leq(a, b); });
    for (int y = 0; y < p.size(); ++y) {
      const Rank2OM& m = macp.elements[at(y)];
      o.expect(m.num_nonloops() + m.num_classes() - 4 == height[at(y)], "height of " + m.key());
      o.expect(rank_h(m) == height[at(y)], "rank_h of " + m.key());
      for (int x = 0; x < p.size(); ++x)
        if (x != y && p.leq(x, y) && (p.up_set(x) & p.down_set(y)).count() == 2)
          o.expect(height[at(y)] == height[at(x)] + 1, "cover jumps rank: " + p.label(x) + " < " + m.key());
    }
  }
  o.detail << "n=2..5";
}

// ------------------------------------------------------------------ 3
void thinness(Outcome& o) {
  for (int n = 2; n <= 5; ++n) {
    const auto macp = enumerate_macp2(n);
    for (const auto& m : macp.elements) {
      const Poset q = lower_interval(macp, m);
      const auto height = oracle::longest_chain_heights(q.size(), [&](int a, int b) { return q.leq(a, b); });
      for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
          if (q.leq(x, y) && height[at(y)] - height[at(x)] == 2)
            o.expect((q.up_set(x) & q.down_set(y)).count() == 4,
                     "[" + q.label(x) + ", " + q.label(y) + "] below " + m.key());
    }
  }
  o.detail << "n=2..5";
}

// ------------------------------------------------------------------ 4
// Every interval [W,T] is semimodular exactly when, for all x covered by
// two distinct u and v and every y above both, some common cover of u and v
// lies below y.
void total_semimodularity(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto macp = enumerate_macp2(n);
    const Poset& p = macp.poset;
    const int size = p.size();
    std::vector<Bitset> upper_covers(at(size), Bitset(at(size)));
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (x != y && p.leq(x, y) && (p.up_set(x) & p.down_set(y)).count() == 2) upper_covers[at(x)].set(at(y));
    for (int x = 0; x < size; ++x)
      for (auto u = upper_covers[at(x)].find_first(); u != Bitset::npos; u = upper_covers[at(x)].find_next(u))
        for (auto v = upper_covers[at(x)].find_next(u); v != Bitset::npos; v = upper_covers[at(x)].find_next(v)) {
          const Bitset common = upper_covers[u] & upper_covers[v];
          const Bitset above = p.up_set(static_cast<int>(u)) & p.up_set(static_cast<int>(v));
          for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y))
            o.expect((common & p.down_set(static_cast<int>(y))).any(),
                     p.label(static_cast<int>(u)) + " and " + p.label(static_cast<int>(v)) + " cover " + p.label(x) +
                         " with no common cover below " + p.label(static_cast<int>(y)));
        }
  }
  o.detail << "n=2..4";
}

// ------------------------------------------------------------------ 5
void atom_orderings(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto macp = enumerate_macp2(n);
    for (const auto& m : macp.elements) {
      const Poset q = lower_interval(macp, m);
      o.expect(verify_recursive_atom_ordering(q, to_atom_ordering(q, rao_ordering(m, realize(m)))), "rao of " + m.key());
    }
  }
  const auto flags = enumerate_macp12(3);
  for (const auto& f : flags.elements) {
    const Poset q = flag_lower_interval(flags, f);
    o.expect(verify_recursive_atom_ordering(q, to_atom_ordering(q, flag_rao_ordering(f, realize(f.M())))),
             "flag rao of " + f.key());
  }
  o.detail << "MacP(2,n) n=2..4 and MacP(1,2,3)";
}

// ------------------------------------------------------------------ 6
bool sphere_like(const Poset& lower, int d) {
  const SimplicialComplex k = order_complex(lower.proper_part());
  const BettiProfile b = betti_gf2(k);
  return b.betti == oracle::sphere_betti(d) && b.euler_consistent && is_sphere_profile(k, d);
}

void spheres(Outcome& o) {
  long long rank2 = 0, flag = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto macp = enumerate_macp2(n);
    for (std::size_t i = 0; i < macp.elements.size(); ++i) {
      const int h = macp.rank[i];
      if (h < 1 || h > 4) continue;
      ++rank2;
      o.expect(sphere_like(lower_interval(macp, macp.elements[i]), h - 1), "sphere below " + macp.elements[i].key());
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const auto flags = enumerate_macp12(n);
    for (std::size_t i = 0; i < flags.elements.size(); ++i) {
      const int h = flags.rank[i];
      if (h < 1) continue;
      ++flag;
      o.expect(sphere_like(flag_lower_interval(flags, flags.elements[i]), h - 1), "sphere below " + flags.elements[i].key());
    }
  }
  o.detail << rank2 << " rank-2 intervals (n<=5), " << flag << " flag intervals (n<=4)";
}

// ------------------------------------------------------------------ 7
// MacP(1,n) rebuilt from scratch: nonzero sign vectors up to sign, with
// X <= Y when X lies below Y or -Y.
void projective_space(Outcome& o) {
  for (int n = 3; n <= 5; ++n) {
    std::vector<SignVector> reps;
    std::vector<std::string> labels;
    for (std::uint32_t pos = 0; pos < (1u << n); ++pos)
      for (std::uint32_t neg = 0; neg < (1u << n); ++neg) {
        if (pos & neg || (pos | neg) == 0) continue;
        const SignVector x(n, pos, neg);
        const std::uint32_t first = (pos | neg) & -(pos | neg);
        if (!(pos & first)) continue;
        reps.push_back(x);
        labels.push_back(x.str());
      }
    const Poset p = build_poset(labels, [&](int a, int b) {
      return reps[at(a)].is_below(reps[at(b)]) || reps[at(a)].is_below(-reps[at(b)]);
    });
    o.expect(p.size() == enumerate_macp1(n).size(), "MacP(1," + std::to_string(n) + ") size");
    const BettiProfile b = betti_gf2(order_complex(p));
    o.expect(b.betti == std::vector<long long>(at(n), 1), "RP^" + std::to_string(n - 1) + " profile");
    o.detail << (n > 3 ? ", " : "") << "n=" << n << ":";
    for (auto v : b.betti) o.detail << ' ' << v;
  }
}

// ------------------------------------------------------------------ 8
void grassmannian(Outcome& o) {
  for (int n = 3; n <= 4; ++n) {
    const auto macp = enumerate_macp2(n);
    const BettiProfile b = betti_gf2(order_complex(macp.poset));
    o.expect(b.betti == oracle::schubert_betti(n), "Gr(2," + std::to_string(n) + ") profile");
    o.detail << (n > 3 ? ", " : "") << "n=" << n << ":";
    for (auto v : b.betti) o.detail << ' ' << v;
  }
}

// ------------------------------------------------------------------ 9
void cells(Outcome& o) {
  long long points = 0, perturbed = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto macp = enumerate_macp2(n);
    for (const auto& m : macp.elements) {
      const auto samples = sample_cell(m, kSamples, kSeed);
      o.expect(samples.size() == kSamples, "sample count for " + m.key());
      for (const auto& x : samples) o.expect(mu(x) == m, "mu round trip for " + m.key());
      points += static_cast<long long>(samples.size());
      for (const auto& face : coatoms_CR(m)) {
        const auto r = sample_boundary(m, face, kSamples, kSeed);
        o.expect(r.failures == 0 && r.perturbations == kSamples * kBoundarySteps, "boundary " + face.key() + " -> " + m.key());
        perturbed += r.perturbations;
      }
    }
    const auto flags = enumerate_macp12(n);
    for (std::size_t i = 0; i < flags.elements.size(); ++i) {
      const FlagOM& f = flags.elements[i];
      const auto samples = sample_flag_cell(f, kSamples, kSeed);
      o.expect(samples.size() == kSamples, "flag sample count for " + f.key());
      for (const auto& [y, x] : samples) o.expect(nu(y, x) == f, "nu round trip for " + f.key());
      points += static_cast<long long>(samples.size());
      for (int c : flags.poset.cocovers(static_cast<int>(i))) {
        const FlagOM& face = flags.elements[at(c)];
        const auto r = sample_flag_boundary(f, face, kSamples, kSeed);
        o.expect(r.failures == 0 && r.perturbations == kSamples * kBoundarySteps, "flag boundary " + face.key() + " -> " + f.key());
        perturbed += r.perturbations;
      }
    }
  }
  o.detail << points << " cell samples, " << perturbed << " boundary perturbations (n=2..4)";
}

// ------------------------------------------------------------------ 10
// Above each base flag (with {1,2} a basis of its plane) the embedding
// uses the base's sign choice as anchor.
void embedding(Outcome& o) {
  const auto flags = enumerate_macp12(3);
  const Poset& p = flags.poset;
  long long bases = 0;
  for (int b = 0; b < p.size(); ++b) {
    const FlagOM& base = flags.elements[at(b)];
    if (base.M().chi(0, 1) == Sign::Zero) continue;
    ++bases;
    const SignVector anchor = iota_sign_choice(base);
    std::vector<int> upper;
    std::vector<std::vector<SignVector>> images;
    for (auto f = p.up_set(b).find_first(); f != Bitset::npos; f = p.up_set(b).find_next(f)) {
      const Rank2OM image = iota_embed(flags.elements[f], anchor);
      const VectorConfig v = realize(image);
      o.expect(mu(Matrix::from_columns(v)) == image, "realization of " + image.key());
      upper.push_back(static_cast<int>(f));
      images.push_back(oracle::sweep_covectors(v));
    }
    for (std::size_t a = 0; a < upper.size(); ++a)
      for (std::size_t c = 0; c < upper.size(); ++c)
        o.expect(flag_leq(flags.elements[at(upper[a])], flags.elements[at(upper[c])]) == oracle::dominated(images[a], images[c]),
                 p.label(upper[a]) + " vs " + p.label(upper[c]) + " above " + base.key());
  }
  o.detail << bases << " upper intervals of MacP(1,2,3)";
}

// ------------------------------------------------------------------ 11
void comparators(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto all = enumerate_rank2(n);
    for (const auto& a : all)
      for (const auto& b : all) o.expect(weak_leq(a, b) == weak_leq_chirotope(a, b), a.key() + " vs " + b.key());
  }
  o.detail << "n=2..4";
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {1, "cover rules match brute-force covers", cover_rules},
    {2, "rank formula equals graded height", rank_formula},
    {3, "lower intervals are thin", thinness},
    {4, "all intervals [W,T] totally semimodular", total_semimodularity},
    {5, "recursive atom orderings verify", atom_orderings},
    {6, "lower intervals have sphere profiles", spheres},
    {7, "MacP(1,n) has the GF(2) homology of RP^(n-1)", projective_space},
    {8, "MacP(2,n) matches the Schubert-cell Betti oracle", grassmannian},
    {9, "cell samples and boundary perturbations round trip", cells},
    {10, "flag order agrees with the embedded order", embedding},
    {11, "covector and chirotope comparators agree", comparators},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only k]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && o.pass;
    std::printf("[%s] %2d %s: %s; %lld checks, %lld failed (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.str().c_str(), o.checked, o.failures, secs);
    if (!o.pass) std::printf("       first failure: %s\n", o.witness.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
