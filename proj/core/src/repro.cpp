#include "visicube/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "visicube/daisy.hpp"
#include "visicube/exact.hpp"
#include "visicube/mv_build.hpp"
#include "visicube/mv_color.hpp"
#include "visicube/oracles.hpp"
#include "visicube/total_mv.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

namespace visicube {

namespace {

// Clamp a sweep's top dimension when the caller asked for a quick run.
int sweep_cap(const ReproOptions& opt, int full) {
  return opt.max_n > 0 ? std::min(full, opt.max_n) : full;
}

bool skipped(const ReproOptions& opt, int needed, CriterionResult& res) {
  if (opt.max_n > 0 && opt.max_n < needed) {
    res.passed = true;
    res.detail = "skipped, needs n >= " + std::to_string(needed);
    return true;
  }
  return false;
}

std::string vertex_label(Vertex v, int n) {
  return to_bitstring(v, n) + " (" + std::to_string(v) + ")";
}

// 1. Unions of two layers three apart are mutual-visibility sets.
void check_layer_pair_unions(const ReproOptions& opt, CriterionResult& res) {
  int unions = 0;
  for (int n = 3; n <= sweep_cap(opt, 8); ++n) {
    for (int r = 0; r + 3 <= n; ++r) {
      std::vector<Vertex> verts = layer_members(n, r);
      for (Vertex v : layer_members(n, r + 3)) verts.push_back(v);
      VertexSet m(n, std::move(verts));
      if (auto bad = mv_violation(m, opt.threads)) {
        res.detail = "L_" + std::to_string(r) + " + L_" + std::to_string(r + 3) +
                     " in Q_" + std::to_string(n) + " has invisible pair " +
                     vertex_label(bad->u, n) + ", " + vertex_label(bad->v, n);
        return;
      }
      ++unions;
    }
  }
  res.passed = true;
  res.detail = std::to_string(unions) + " layer pairs verified";
}

// 2. Greedy layered constructions verify exhaustively and their
// witness paths check out on sampled member pairs.
void check_layered_builds(const ReproOptions& opt, CriterionResult& res) {
  if (skipped(opt, 6, res)) return;
  constexpr int kSamples = 500;
  int sets = 0;
  std::uint64_t paths = 0;
  for (int n = 6; n <= sweep_cap(opt, 9); ++n) {
    for (int lambda = 0; lambda < 3; ++lambda) {
      LayeredConstruction k = build_layered_set(n, 3, lambda, greedy_supplier());
      VertexSet m = k.as_vertex_set();
      if (auto bad = mv_violation(m, opt.threads)) {
        res.detail = "M(" + std::to_string(lambda) + ") in Q_" + std::to_string(n) +
                     " has invisible pair " + vertex_label(bad->u, n) + ", " +
                     vertex_label(bad->v, n);
        return;
      }
      const std::vector<Vertex>& verts = m.members();
      std::mt19937_64 rng(opt.base_seed ^ (static_cast<std::uint64_t>(n) << 8 |
                                           static_cast<std::uint64_t>(lambda)));
      for (int i = 0; i < kSamples; ++i) {
        Vertex a = verts[rng() % verts.size()];
        Vertex b = verts[rng() % verts.size()];
        if (a == b) continue;
        Path p = witness_path(a, b, k);
        if (p.vertices.front() != a || p.vertices.back() != b || !p.shortest() ||
            !p.internally_avoids(m)) {
          res.detail = "bad witness path " + vertex_label(a, n) + " -> " +
                       vertex_label(b, n) + " in M(" + std::to_string(lambda) +
                       "), Q_" + std::to_string(n);
          return;
        }
        ++paths;
      }
      ++sets;
    }
  }
  res.passed = true;
  res.detail = std::to_string(sets) + " sets verified, " + std::to_string(paths) +
               " witness paths checked";
}

// 3. The density constant arithmetic holds exactly.
void check_density_constant(const ReproOptions&, CriterionResult& res) {
  if (!density_constant_check()) {
    res.detail = "exact rational identity or Euler product bound failed";
    return;
  }
  Rational p = euler_product_lower(3, 20);
  res.passed = true;
  res.detail = "56/300 = 14/75 and Euler product bound " +
               to_decimal_string(p, 6) + " > 0.56";
}

// 4. Exact daisy Turán values match the hitting-set oracle, the
// averaging bound evaluates exactly, and densities fall monotonically.
void check_turan_ground_truth(const ReproOptions& opt, CriterionResult& res) {
  struct Case {
    int n, r, s, t;
    std::uint64_t want;
  };
  const Case cases[] = {{3, 2, 2, 1, 1}, {7, 3, 6, 3, 33}, {7, 4, 6, 3, 33}};
  for (const Case& c : cases) {
    if (opt.max_n > 0 && c.n > opt.max_n) continue;
    TuranRecord rec = turan_exact(c.n, c.r, c.s, c.t);
    if (!rec.optimal || rec.value != c.want) {
      res.detail = "turan(" + std::to_string(c.n) + "," + std::to_string(c.r) +
                   "," + std::to_string(c.s) + "," + std::to_string(c.t) +
                   ") = " + std::to_string(rec.value) +
                   (rec.optimal ? "" : " (budget ran out)") + ", expected " +
                   std::to_string(c.want);
      return;
    }
    std::uint64_t oracle = oracle::turan_by_hitting_oracle(c.n, c.r, c.s, c.t);
    if (oracle != c.want) {
      res.detail = "hitting-set oracle disagrees at (" + std::to_string(c.n) +
                   "," + std::to_string(c.r) + "): " + std::to_string(oracle);
      return;
    }
  }

  if (!(opt.max_n > 0 && opt.max_n < 7)) {
    BoundReport rep = layered_size_bound(7, 3, {{3, 33}, {4, 33}});
    if (rep.total != Rational(124, 3)) {
      res.detail = "averaging bound for n=7, d=3 came out " +
                   to_decimal_string(rep.total, 4) + ", expected 124/3";
      return;
    }
  }

  std::vector<TuranRecord> chain;
  for (int n = 3; n <= sweep_cap(opt, 7); ++n) {
    chain.push_back(turan_exact(n, 2, 2, 1));
    if (!chain.back().optimal) {
      res.detail = "turan(" + std::to_string(n) + ",2,2,1) ran out of budget";
      return;
    }
    if (chain.back().value != static_cast<std::uint64_t>(n / 2)) {
      res.detail = "turan(" + std::to_string(n) + ",2,2,1) = " +
                   std::to_string(chain.back().value) + ", expected " +
                   std::to_string(n / 2);
      return;
    }
  }
  if (chain.size() >= 2 && !densities_monotone(chain)) {
    res.detail = "density chain for (r,s,t)=(2,2,1) is not monotone";
    return;
  }
  res.passed = true;
  res.detail = "values 1/33/33 confirmed against oracle, bound 124/3, chain monotone";
}

// 5. The largest total-MV value sits inside the counting window.
void check_total_mv_window(const ReproOptions& opt, CriterionResult& res) {
  for (int n = 2; n <= sweep_cap(opt, 6); ++n) {
    SolveResult r = max_total_mv(n);
    std::uint64_t cube = std::uint64_t{1} << n;
    std::uint64_t lo = (cube / 2 + n - 1) / n;
    std::uint64_t hi = cube / n;
    if (!r.optimal || r.value < lo || r.value > hi) {
      res.detail = "max total-MV value " + std::to_string(r.value) + " at n=" +
                   std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]";
      return;
    }
    if (n == 3 && r.value != 2) {
      res.detail = "max total-MV value at n=3 is " + std::to_string(r.value) +
                   ", expected 2";
      return;
    }
  }
  res.passed = true;
  res.detail = "window holds for n = 2..6, value 2 at n = 3";
}

// 6. Hamming codes have perfect-code size, distance and tiling, and the
// small ones are total-MV sets under both characterizations.
void check_perfect_codes(const ReproOptions& opt, CriterionResult& res) {
  for (int m = 2; m <= 4; ++m) {
    const int n = (1 << m) - 1;
    if (opt.max_n > 0 && n > opt.max_n) continue;
    VertexSet code = hamming_code(m);
    const std::uint64_t cube = std::uint64_t{1} << n;
    if (code.size() * (n + 1) != cube) {
      res.detail = "hamming_code(" + std::to_string(m) + ") has " +
                   std::to_string(code.size()) + " words, expected " +
                   std::to_string(cube / (n + 1));
      return;
    }
    const std::vector<Vertex>& words = code.members();
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (dist(words[i], words[j]) < 3) {
          res.detail = "codewords at distance " +
                       std::to_string(dist(words[i], words[j])) + " in m=" +
                       std::to_string(m);
          return;
        }
      }
    }
    std::vector<std::uint8_t> covered(cube, 0);
    for (Vertex w : words) {
      ++covered[w];
      for (int j = 1; j <= n; ++j) ++covered[w ^ bit(j)];
    }
    for (std::uint64_t v = 0; v < cube; ++v) {
      if (covered[v] != 1) {
        res.detail = "radius-1 balls cover " + vertex_label(v, n) + " " +
                     std::to_string(covered[v]) + " times (m=" +
                     std::to_string(m) + ")";
        return;
      }
    }
    if (m <= 3) {
      if (!avoids_distance2(code)) {
        res.detail = "hamming_code(" + std::to_string(m) +
                     ") holds a distance-2 pair";
        return;
      }
      if (!is_total_mv_set(code)) {
        res.detail = "hamming_code(" + std::to_string(m) +
                     ") fails the direct total-visibility scan";
        return;
      }
    }
  }
  res.passed = true;
  res.detail = "m = 2, 3, 4 tile the cube; m = 2, 3 are total-MV both ways";
}

// 7. Avoiding distance 2 and total mutual visibility agree, exhaustively
// on Q_3 and on seeded random subsets of Q_4, Q_5.
void check_distance2_equivalence(const ReproOptions& opt, CriterionResult& res) {
  std::uint64_t agreements = 0;
  auto compare = [&](const VertexSet& s) -> bool {
    bool a = avoids_distance2(s);
    bool b = is_total_mv_set(s);
    if (a != b) {
      res.detail = "characterizations disagree on an n=" +
                   std::to_string(s.dimension()) + " subset of size " +
                   std::to_string(s.size()) + " (distance-2 says " +
                   (a ? "yes" : "no") + ")";
      return false;
    }
    ++agreements;
    return true;
  };

  for (std::uint64_t pick = 0; pick < 256; ++pick) {
    std::vector<Vertex> verts;
    for (int v = 0; v < 8; ++v) {
      if (pick >> v & 1) verts.push_back(static_cast<Vertex>(v));
    }
    if (!compare(VertexSet(3, std::move(verts)))) return;
  }

  for (int n = 4; n <= sweep_cap(opt, 5); ++n) {
    std::mt19937_64 rng(opt.base_seed ^ static_cast<std::uint64_t>(n));
    for (int i = 0; i < 1000; ++i) {
      // Cycle the inclusion odds through 1/2 .. 1/16 so both sparse
      // sets (usually fine) and dense ones (usually not) show up.
      const std::uint64_t mask = (std::uint64_t{1} << (1 + i % 4)) - 1;
      std::vector<Vertex> verts;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if ((rng() & mask) == 0) verts.push_back(v);
      }
      if (!compare(VertexSet(n, std::move(verts)))) return;
    }
  }
  res.passed = true;
  res.detail = std::to_string(agreements) + " subsets agreed";
}

// 8. Residue classes of each layer are large, spread out, and the A/B
// construction built from them avoids distance 2.
void check_weight_classes(const ReproOptions& opt, CriterionResult& res) {
  for (int n = 1; n <= sweep_cap(opt, 14); ++n) {
    for (int w = 0; w <= n; ++w) {
      WeightClassList list = weight_classes(n, w);
      const std::uint64_t layer = binomial(n, w);
      std::uint64_t covered = 0;
      for (const WeightClass& c : list.classes) {
        covered += c.members.size();
        const std::vector<Vertex>& verts = c.members.members();
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (weight(verts[i]) != w ||
              position_norm(verts[i]) % n != c.residue) {
            res.detail = "vertex " + vertex_label(verts[i], n) +
                         " landed in the wrong class (n=" + std::to_string(n) +
                         ", w=" + std::to_string(w) + ")";
            return;
          }
          for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (dist(verts[i], verts[j]) < 4) {
              res.detail = "class members at distance " +
                           std::to_string(dist(verts[i], verts[j])) + " (n=" +
                           std::to_string(n) + ", w=" + std::to_string(w) + ")";
              return;
            }
          }
        }
      }
      if (covered != layer) {
        res.detail = "classes cover " + std::to_string(covered) + " of " +
                     std::to_string(layer) + " layer members (n=" +
                     std::to_string(n) + ", w=" + std::to_string(w) + ")";
        return;
      }
      std::uint64_t best = list.classes[list.best_index].members.size();
      if (best * n < layer) {
        res.detail = "best class size " + std::to_string(best) +
                     " misses C(n,w)/n (n=" + std::to_string(n) + ", w=" +
                     std::to_string(w) + ")";
        return;
      }
    }

    TotalMvConstruction ab = build_ab(n);
    std::uint64_t bigger = std::max(ab.group_a.size(), ab.group_b.size());
    if (bigger * n < (std::uint64_t{1} << (n - 1))) {
      res.detail = "A/B groups top out at " + std::to_string(bigger) +
                   " members, below 2^(n-1)/n (n=" + std::to_string(n) + ")";
      return;
    }
    if (!avoids_distance2(ab.group_a) || !avoids_distance2(ab.group_b)) {
      res.detail = "A/B group holds a distance-2 pair (n=" + std::to_string(n) +
                   ")";
      return;
    }
  }
  res.passed = true;
  res.detail = "layer classes and A/B groups verified for n = 1..14";
}

// 9. The cube partitions into at most 2n distance-2-avoiding classes.
void check_cube_partition(const ReproOptions& opt, CriterionResult& res) {
  for (int n = 1; n <= sweep_cap(opt, 12); ++n) {
    std::vector<PartitionClass> classes = total_mv_partition(n);
    if (classes.size() > static_cast<std::size_t>(2 * n)) {
      res.detail = std::to_string(classes.size()) + " classes at n=" +
                   std::to_string(n) + ", limit " + std::to_string(2 * n);
      return;
    }
    std::vector<Vertex> all;
    for (const PartitionClass& c : classes) {
      if (!avoids_distance2(c.members)) {
        res.detail = "class (" + std::to_string(c.residue) + ", " + c.side +
                     ") holds a distance-2 pair (n=" + std::to_string(n) + ")";
        return;
      }
      const std::vector<Vertex>& verts = c.members.members();
      all.insert(all.end(), verts.begin(), verts.end());
    }
    std::sort(all.begin(), all.end());
    if (all.size() != (std::uint64_t{1} << n) ||
        std::adjacent_find(all.begin(), all.end()) != all.end()) {
      res.detail = "classes do not partition the cube at n=" + std::to_string(n);
      return;
    }
  }
  res.passed = true;
  res.detail = "at most 2n classes, exact cover, for n = 1..12";
}

// 10. Random layered colorings repair to verified 6-class colorings for
// 100 seeds, and the feasibility criterion clears 1.
void check_coloring_repair(const ReproOptions& opt, CriterionResult& res) {
  if (skipped(opt, 8, res)) return;
  std::uint64_t total_rounds = 0;
  std::uint64_t max_rounds_seen = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(i);
    Coloring start = layered_coloring(8, 3, seed);
    RepairOutcome out = moser_tardos_repair(start, 100'000, seed);
    if (!out.converged) {
      res.detail = "repair did not converge within 100000 rounds (seed " +
                   std::to_string(seed) + ")";
      return;
    }
    std::size_t nonempty = 0;
    for (const VertexSet& cls : out.coloring.classes()) {
      if (cls.size() > 0) ++nonempty;
    }
    if (nonempty > 6) {
      res.detail = std::to_string(nonempty) + " classes after repair (seed " +
                   std::to_string(seed) + ")";
      return;
    }
    if (auto bad = coloring_violation(out.coloring, opt.threads)) {
      res.detail = "class " + std::to_string(bad->color_id) +
                   " has invisible pair " + vertex_label(bad->pair.u, 8) + ", " +
                   vertex_label(bad->pair.v, 8) + " (seed " +
                   std::to_string(seed) + ")";
      return;
    }
    total_rounds += out.rounds;
    max_rounds_seen = std::max(max_rounds_seen, out.rounds);
  }
  LLLReport lll = lll_feasibility(8, 3, 4);
  if (!lll.satisfied || !(lll.criterion < Rational(1))) {
    res.detail = "feasibility criterion for (8, 3, 4) is " +
                 to_decimal_string(lll.criterion, 6) + ", not below 1";
    return;
  }
  res.passed = true;
  res.detail = "100 seeds verified, worst repair " +
               std::to_string(max_rounds_seen) + " rounds, total " +
               std::to_string(total_rounds) + "; criterion " +
               to_decimal_string(lll.criterion, 6) + " < 1";
}

// 11. The exact solvers agree with independent enumeration and with the
// constructions.
void check_solver_cross_checks(const ReproOptions& opt, CriterionResult& res) {
  std::vector<std::uint64_t> mu;  // mu[n] for solved n
  mu.push_back(0);
  for (int n = 1; n <= sweep_cap(opt, 4); ++n) {
    SolveResult r = max_mv(n);
    if (!r.optimal) {
      res.detail = "max-MV solver ran out of budget at n=" + std::to_string(n);
      return;
    }
    if (n <= 3) {
      std::uint64_t brute = oracle::max_mv_exhaustive(n);
      if (r.value != brute) {
        res.detail = "max-MV " + std::to_string(r.value) + " at n=" +
                     std::to_string(n) + ", exhaustive enumeration says " +
                     std::to_string(brute);
        return;
      }
    }
    if (auto bad = oracle::mv_violation_by_permutations(r.certificate.at(0))) {
      res.detail = "max-MV certificate fails the permutation oracle at n=" +
                   std::to_string(n);
      return;
    }
    mu.push_back(r.value);
  }
  if (mu.size() > 2 && mu[2] != 3) {
    res.detail = "max-MV value at n=2 is " + std::to_string(mu[2]) +
                 ", expected 3";
    return;
  }

  for (int n = 1; n < static_cast<int>(mu.size()); ++n) {
    SolveResult chi = chromatic_mv(n);
    if (!chi.optimal) {
      res.detail = "MV coloring solver ran out of budget at n=" +
                   std::to_string(n);
      return;
    }
    std::uint64_t cube = std::uint64_t{1} << n;
    std::uint64_t floor_classes = (cube + mu[n] - 1) / mu[n];
    if (chi.value < floor_classes) {
      res.detail = "MV class count " + std::to_string(chi.value) + " at n=" +
                   std::to_string(n) + " beats the pigeonhole floor " +
                   std::to_string(floor_classes);
      return;
    }
    if (n == 2 && chi.value != 2) {
      res.detail = "MV class count at n=2 is " + std::to_string(chi.value) +
                   ", expected 2";
      return;
    }
    std::uint64_t covered = 0;
    for (const VertexSet& cls : chi.certificate) {
      covered += cls.size();
      if (!is_mv_set(cls)) {
        res.detail = "an MV coloring class fails verification at n=" +
                     std::to_string(n);
        return;
      }
    }
    if (covered != cube ||
        chi.certificate.size() != static_cast<std::size_t>(chi.value)) {
      res.detail = "MV coloring certificate does not partition Q_" +
                   std::to_string(n);
      return;
    }
  }

  for (int n = 6; n <= sweep_cap(opt, 7); ++n) {
    LayeredConstruction k = best_layered_set(n, 3, greedy_supplier());
    SolveResult r = max_mv(n, std::chrono::milliseconds{5'000});
    if (r.value < k.size()) {
      res.detail = "max-MV search reports " + std::to_string(r.value) +
                   " at n=" + std::to_string(n) +
                   ", below the layered construction's " +
                   std::to_string(k.size());
      return;
    }
    if (!is_mv_set(r.certificate.at(0), opt.threads)) {
      res.detail = "max-MV certificate fails verification at n=" +
                   std::to_string(n);
      return;
    }
  }
  res.passed = true;
  res.detail = "solver values match oracles and dominate the constructions";
}

std::string format_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof(secs), "%.2f", r.seconds);
  std::string line = r.passed ? "PASS" : "FAIL";
  line += "  ";
  line += std::to_string(r.index);
  line += "  ";
  line += r.name;
  line += "  (";
  line += secs;
  line += "s)  ";
  line += r.detail;
  return line;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const ReproOptions& options) {
  struct Entry {
    const char* name;
    void (*fn)(const ReproOptions&, CriterionResult&);
  };
  static const Entry entries[] = {
      {"layer-pair-unions", check_layer_pair_unions},
      {"layered-builds-with-witness-paths", check_layered_builds},
      {"density-constant-arithmetic", check_density_constant},
      {"turan-ground-truth", check_turan_ground_truth},
      {"total-mv-size-window", check_total_mv_window},
      {"perfect-code-properties", check_perfect_codes},
      {"distance2-equivalence", check_distance2_equivalence},
      {"weight-class-partitions", check_weight_classes},
      {"cube-partition-small-classes", check_cube_partition},
      {"coloring-repair-and-feasibility", check_coloring_repair},
      {"solver-cross-checks", check_solver_cross_checks},
  };

  std::vector<CriterionResult> out;
  int index = 0;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.index = ++index;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(options, r);
    } catch (const std::exception& ex) {
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (options.progress) {
      *options.progress << format_line(r) << std::endl;
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

std::string summary_table(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const CriterionResult& r : results) {
    out += format_line(r);
    out += '\n';
  }
  return out;
}

}  // namespace visicube
