// Acceptance gate: ten scripted criteria, one pass/fail line each.
// Exits with the number of failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "regseq.hpp"
#include "support/brute.hpp"
#include "support/random_objects.hpp"

using namespace regseq;
using testsupport::Rng;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::cout << "[" << std::setw(2) << num << "/10] "
            << (ok ? "PASS" : "FAIL") << "  " << label << " ("
            << std::fixed << std::setprecision(2) << secs << "s)";
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// Shared randomized corpus: small rings, monomial modules, short sequences
// of variable products.

struct Instance {
  unsigned ring_index;  // 0 -> 1 var, 1 -> 2 vars, 2 -> 3 vars
  FPModule<GF> module;
  std::vector<Polynomial<GF>> seq;
};

struct Corpus {
  std::vector<PolyRing<GF>> rings;
  std::vector<Instance> instances;
};

Corpus build_corpus(std::size_t count, unsigned seed) {
  GF k(32003);
  Corpus c;
  c.rings.push_back(PolyRing<GF>({"x"}, k));
  c.rings.push_back(PolyRing<GF>({"x", "y"}, k));
  c.rings.push_back(PolyRing<GF>({"x", "y", "z"}, k));
  Rng rng(seed);
  while (c.instances.size() < count) {
    unsigned ri = testsupport::pick(rng, 0, 2);
    const PolyRing<GF>& R = c.rings[ri];
    FPModule<GF> M = testsupport::random_monomial_module(
        rng, R, /*maxrank=*/2, /*maxgens=*/5, /*maxdeg=*/4,
        /*graded=*/true);
    unsigned r = testsupport::pick(rng, 1, 3);
    std::vector<Polynomial<GF>> f;
    for (unsigned j = 0; j < r; ++j)
      f.push_back(testsupport::random_variable_product(rng, R));
    c.instances.push_back(Instance{ri, std::move(M), std::move(f)});
  }
  return c;
}

// ---------------------------------------------------------------------------
// CLI plumbing for criterion 10.

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd =
      std::string(REGSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    ok = false;
    return "";
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Criterion bodies.

template <class F>
bool golden_example_on(const F& k, std::string& why) {
  PolyRing<F> R({"x", "y", "z"}, k);
  auto X = R.variable(0), Y = R.variable(1), Z = R.variable(2);
  FPModule<F> M =
      cyclic_module(Ideal<F>(R, {R.parse("y*(x-1)"), R.parse("y*z")}));
  std::vector<Polynomial<F>> zx = {Z, X}, xz = {X, Z};

  auto strong = is_strongly_regular(zx, M);
  auto reg = is_regular(zx, M);
  if (strong.holds || !reg.holds) {
    why = "(z,x) must be regular but not strongly regular";
    return false;
  }
  if (!strong.zero_divisor.has_value() || strong.zero_divisor->step != 1 ||
      strong.zero_divisor->element != M.ambient().from_components({Y})) {
    why = "zero-divisor witness must be y at step 1";
    return false;
  }
  if (!revalidate_witness(strong, zx, M)) {
    why = "witness failed independent revalidation";
    return false;
  }
  if (!is_strongly_regular(xz, M).holds || !is_regular(xz, M).holds) {
    why = "(x,z) must be strongly regular";
    return false;
  }
  if (depth_ext(M) != DepthValue::of(2)) {
    why = "depth at the irrelevant maximal ideal must be 2";
    return false;
  }
  auto q = PrimeCandidate<F>::make("q",
                                   Ideal<F>(R, {R.parse("x-1"), Y, Z}));
  if (local_depth(M, q) != DepthValue::of(1)) {
    why = "depth at (x-1, y, z) must be 1";
    return false;
  }
  auto rep = theorem_crosscheck(zx, M, std::nullopt, true);
  if (!rep.consistent || !rep.complete || rep.rows.size() != 1 ||
      rep.rows[0].prime.label() != "(x, y, z)") {
    why = "theorem cross-check must close over Ass = {(x, y, z)}";
    return false;
  }
  return true;
}

bool crit1_golden(std::string& why) {
  auto t0 = std::chrono::steady_clock::now();
  if (!golden_example_on(GF(32003), why)) return false;
  if (!golden_example_on(QQ(), why)) return false;
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  if (secs >= 1.0) {
    why = "golden example exceeded the 1s budget";
    return false;
  }
  return true;
}

bool crit2_theorem_corpus(const Corpus& corpus, std::string& why) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (const auto& inst : corpus.instances) {
    auto rep = theorem_crosscheck(inst.seq, inst.module, std::nullopt, true);
    if (!rep.consistent) {
      why = "inconsistency between the Koszul and depth criteria at instance " +
            std::to_string(n);
      return false;
    }
    ++n;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  if (secs >= 60.0) {
    why = "corpus exceeded the 60s budget";
    return false;
  }
  why = std::to_string(n) + " instances, no inconsistencies";
  return true;
}

bool crit3_strong_vs_prefixes(const Corpus& corpus, std::string& why) {
  std::size_t n = 0;
  for (const auto& inst : corpus.instances) {
    bool strong = is_strongly_regular(inst.seq, inst.module).holds;
    bool all_prefixes = true;
    for (std::size_t len = 1; len <= inst.seq.size(); ++len) {
      std::vector<Polynomial<GF>> prefix(inst.seq.begin(),
                                         inst.seq.begin() +
                                             static_cast<long>(len));
      if (!is_regular(prefix, inst.module).holds) {
        all_prefixes = false;
        break;
      }
    }
    if (strong != all_prefixes) {
      why = "strong regularity disagreed with prefix regularity at instance " +
            std::to_string(n);
      return false;
    }
    ++n;
  }
  why = std::to_string(n) + " instances agree";
  return true;
}

bool crit4_permutations(const Corpus& corpus, std::string& why) {
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus.instances.size() && checked < 60; ++i) {
    const auto& inst = corpus.instances[i];
    if (inst.seq.size() < 2) continue;
    bool base = is_regular(inst.seq, inst.module).holds;
    std::vector<Polynomial<GF>> perm = inst.seq;
    std::sort(perm.begin(), perm.end(),
              [&](const Polynomial<GF>& a, const Polynomial<GF>& b) {
                return corpus.rings[inst.ring_index].to_string(a) <
                       corpus.rings[inst.ring_index].to_string(b);
              });
    do {
      if (is_regular(perm, inst.module).holds != base) {
        why = "regularity depended on the order of the sequence";
        return false;
      }
    } while (std::next_permutation(
        perm.begin(), perm.end(),
        [&](const Polynomial<GF>& a, const Polynomial<GF>& b) {
          return corpus.rings[inst.ring_index].to_string(a) <
                 corpus.rings[inst.ring_index].to_string(b);
        }));
    ++checked;
  }
  why = std::to_string(checked) + " sequences, all orders agree";
  return true;
}

std::vector<FPModule<GF>> graded_fixture_modules(std::size_t target) {
  GF k(32003);
  std::vector<FPModule<GF>> mods;
  std::vector<PolyRing<GF>> rings = {PolyRing<GF>({"x"}, k),
                                     PolyRing<GF>({"x", "y"}, k),
                                     PolyRing<GF>({"x", "y", "z"}, k)};
  // Named fixtures with known depths first.
  for (unsigned n = 1; n <= 3; ++n)
    mods.push_back(free_module(rings[1], n, true));
  PolyRing<GF>& R2 = rings[1];
  mods.push_back(cyclic_module(
      Ideal<GF>(R2, {R2.parse("x^2"), R2.parse("x*y")}), true));
  mods.push_back(cyclic_module(Ideal<GF>(R2, {R2.parse("x*y")}), true));
  Rng rng(424242);
  while (mods.size() < target) {
    unsigned ri = testsupport::pick(rng, 0, 2);
    mods.push_back(testsupport::random_monomial_module(
        rng, rings[ri], 2, 4, 4, true));
  }
  return mods;
}

bool crit5_depth_agreement(std::string& why) {
  auto mods = graded_fixture_modules(100);
  // Known anchors: free rank n over k[x,y] has depth 2; the two cyclic
  // fixtures have depths 0 and 1.
  if (depth_via_koszul(mods[0]) != DepthValue::of(2) ||
      depth_via_koszul(mods[3]) != DepthValue::of(0) ||
      depth_via_koszul(mods[4]) != DepthValue::of(1)) {
    why = "a named fixture missed its known depth";
    return false;
  }
  std::size_t n = 0;
  for (const auto& M : mods) {
    DepthValue a = depth_via_koszul(M);
    DepthValue b = depth_ext(M);
    if (a != b) {
      why = "Koszul and Ext depths disagreed at fixture " +
            std::to_string(n);
      return false;
    }
    ++n;
  }
  why = std::to_string(n) + " graded modules agree";
  return true;
}

bool crit6_corollary_pairs(std::string& why) {
  GF k(32003);
  PolyRing<GF> R({"x", "y"}, k);
  auto x = R.variable(0), y = R.variable(1);
  FPModule<GF> Rfree = free_module(R, 1, true);

  using Seq = std::vector<Polynomial<GF>>;
  struct Pair {
    Seq f, g;
    bool expect_hypothesis;
  };
  std::vector<Pair> pairs;
  // The canonical pair plus hand-built variants.
  pairs.push_back({{x, y}, {R.parse("x+y"), R.parse("x*y")}, true});
  pairs.push_back({{x, y}, {R.parse("x^2"), R.parse("y^3")}, true});
  pairs.push_back({{x, y}, {R.parse("x - y"), R.parse("x + y")}, true});
  pairs.push_back({{x, y}, {R.parse("x^2 + y^2"), R.parse("x*y")}, true});
  pairs.push_back({{x, y}, {y, x}, true});
  // Hypothesis failures: g vanishes on more than f does.
  pairs.push_back({{x, y}, {x, x}, false});
  pairs.push_back({{x, y}, {x, R.parse("x*y")}, false});
  pairs.push_back({{x, y}, {R.parse("x*y"), R.zero()}, false});
  // Randomized power/sum perturbations of the canonical pair.
  Rng rng(606060);
  while (pairs.size() < 20) {
    unsigned a = testsupport::pick(rng, 1, 3);
    unsigned b = testsupport::pick(rng, 1, 3);
    long c = static_cast<long>(testsupport::pick(rng, 1, 6));
    Polynomial<GF> g1 =
        R.add(R.pow(x, a), R.scale(R.pow(y, b), k.from_int(c)));
    Polynomial<GF> g2 =
        R.mul(R.pow(x, testsupport::pick(rng, 1, 2)),
              R.pow(y, testsupport::pick(rng, 1, 2)));
    pairs.push_back({{x, y}, {g1, g2}, true});
  }

  std::size_t n = 0;
  for (const auto& pr : pairs) {
    auto rep = corollary2_check(pr.f, pr.g, Rfree);
    if (rep.hypothesis != pr.expect_hypothesis) {
      why = "hypothesis detection wrong at pair " + std::to_string(n);
      return false;
    }
    if (rep.applicable) {
      if (!rep.g_verdict.has_value() || !rep.g_verdict->holds ||
          !rep.consistent) {
        why = "conclusion failed on an applicable pair " + std::to_string(n);
        return false;
      }
    } else {
      if (rep.g_verdict.has_value() || !rep.consistent) {
        why = "inapplicable pair must be reported without assertion";
        return false;
      }
    }
    ++n;
  }
  why = std::to_string(n) + " pairs behaved";
  return true;
}

bool crit7_cm_sops(std::string& why) {
  GF k(32003);
  PolyRing<GF> R({"x", "y"}, k);
  auto x = R.variable(0), y = R.variable(1);

  std::vector<FPModule<GF>> cm;
  cm.push_back(free_module(R, 1, true));
  cm.push_back(free_module(R, 2, true));
  cm.push_back(free_module(R, 3, true));
  for (const char* form : {"x*y", "x^2", "y^2", "x^2 + y^2", "x^2 + x*y",
                           "x^3 + y^3", "y^3"})
    cm.push_back(cyclic_module(Ideal<GF>(R, {R.parse(form)}), true));

  Rng rng(777);
  auto random_linear = [&]() {
    for (;;) {
      long a = static_cast<long>(testsupport::pick(rng, 0, 6));
      long b = static_cast<long>(testsupport::pick(rng, 0, 6));
      if (a == 0 && b == 0) continue;
      return R.add(R.scale(x, k.from_int(a)), R.scale(y, k.from_int(b)));
    }
  };

  std::size_t n = 0;
  for (const auto& M : cm) {
    int d = krull_dimension(M);
    // Draw homogeneous parameter systems until one cuts to dimension 0.
    std::vector<Polynomial<GF>> f;
    for (int attempts = 0;; ++attempts) {
      if (attempts > 200) {
        why = "could not find a homogeneous sop";
        return false;
      }
      f.clear();
      for (int j = 0; j < d; ++j) f.push_back(random_linear());
      if (krull_dimension(quotient_by_sequence(M, f)) == 0) break;
    }
    auto rep = sop_regular_check(f, M);
    if (!rep.is_sop || !rep.is_cm || !rep.regular.has_value() ||
        !rep.regular->holds || !rep.consistent) {
      why = "a CM fixture rejected its sop at index " + std::to_string(n);
      return false;
    }
    ++n;
  }

  // The non-CM module reports the CM failure and asserts nothing.
  FPModule<GF> T = cyclic_module(
      Ideal<GF>(R, {R.parse("x^2"), R.parse("x*y")}), true);
  auto rep = sop_regular_check<GF>({y}, T);
  if (!rep.is_sop || rep.is_cm || rep.regular.has_value() ||
      !rep.consistent) {
    why = "the non-CM fixture must report depth < dim without asserting";
    return false;
  }
  why = std::to_string(n) + " CM fixtures plus the non-CM control";
  return true;
}

bool crit8_hilbert_and_brute(std::string& why) {
  auto mods = graded_fixture_modules(60);
  std::size_t hn = 0;
  for (const auto& M : mods) {
    for (unsigned d = 0; d <= 6; ++d) {
      if (hilbert_function(M, d) !=
          testsupport::gb_standard_monomial_count(M, d)) {
        why = "dense Hilbert value disagreed with the standard-monomial count";
        return false;
      }
    }
    ++hn;
  }

  GF k(32003);
  PolyRing<GF> R({"x", "y"}, k);
  Rng rng(909090);
  for (int t = 0; t < 25; ++t) {
    // Colon ideals against monomial modules, both inclusions by brute force.
    FPModule<GF> M =
        testsupport::random_monomial_module(rng, R, 2, 4, 3, false);
    unsigned comp = testsupport::pick(rng, 0, M.rank() - 1);
    Ideal<GF> C = component_colon(M, comp);
    for (unsigned d = 0; d <= 4; ++d) {
      for (const auto& mono : monomials_of_degree(R.arity(), d)) {
        Polynomial<GF> c = R.term(mono, k.one());
        bool in_colon = C.contains(c);
        bool kills = M.relations().contains(
            M.ambient().mul_poly(c, M.ambient().unit(comp)));
        if (in_colon != kills) {
          why = "colon ideal membership failed brute-force validation";
          return false;
        }
      }
    }
  }
  for (int t = 0; t < 25; ++t) {
    // Kernels of multiplication maps, re-derived degree by degree.
    FPModule<GF> M =
        testsupport::random_monomial_module(rng, R, 2, 3, 3, false);
    Polynomial<GF> f = testsupport::random_variable_product(rng, R);
    ModuleMap<GF> phi(M, M, [&] {
      std::vector<std::vector<Polynomial<GF>>> mat(
          M.rank(), std::vector<Polynomial<GF>>(M.rank(), R.zero()));
      for (unsigned i = 0; i < M.rank(); ++i) mat[i][i] = f;
      return mat;
    }());
    auto K = kernel(phi);
    std::vector<FreeElement<GF>> span = K.lifts;
    for (const auto& g : M.relations().generators()) span.push_back(g);
    Submodule<GF> covered(R, M.rank(), span);
    auto solutions = testsupport::brute_solutions<GF>(
        M.ambient(), 4, [&](const FreeElement<GF>& v) {
          return M.relations().nf(M.ambient().mul_poly(f, v));
        });
    for (const auto& v : solutions) {
      if (!covered.contains(v)) {
        why = "a brute-force kernel element escaped the computed kernel";
        return false;
      }
    }
    for (const auto& z : K.lifts) {
      if (!M.relations().contains(M.ambient().mul_poly(f, z))) {
        why = "a computed kernel generator failed the defining equation";
        return false;
      }
    }
  }
  why = std::to_string(hn) + " Hilbert fixtures, 50 brute-force instances";
  return true;
}

bool crit9_flat_extension(const Corpus& corpus, std::string& why) {
  std::size_t n = 0;
  for (const auto& inst : corpus.instances) {
    if (n >= 50) break;
    FPModule<GF> Me = adjoin_variable(inst.module);
    const PolyRing<GF>& Re = Me.ring();
    const PolyRing<GF>& R = corpus.rings[inst.ring_index];
    std::vector<Polynomial<GF>> fe;
    for (const auto& p : inst.seq) fe.push_back(Re.parse(R.to_string(p)));

    bool reg_before = is_regular(inst.seq, inst.module).holds;
    bool reg_after = is_regular(fe, Me).holds;
    if (reg_before != reg_after) {
      why = "regularity changed under the flat extension at instance " +
            std::to_string(n);
      return false;
    }
    bool strong_before = is_strongly_regular(inst.seq, inst.module).holds;
    bool strong_after = is_strongly_regular(fe, Me).holds;
    if (strong_before != strong_after) {
      why = "strong regularity changed under the flat extension at instance " +
            std::to_string(n);
      return false;
    }
    ++n;
  }
  why = std::to_string(n) + " extensions preserved both verdicts";
  return true;
}

bool crit10_cli_corpus(std::string& why) {
  auto t0 = std::chrono::steady_clock::now();
  std::string dir = REGSEQ_FIXTURES_DIR;
  std::ifstream in(dir + "/corpus.txt");
  if (!in.good()) {
    why = "missing corpus manifest";
    return false;
  }
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, sess, tok, args;
    int expected = 0;
    ls >> name >> expected >> sess;
    while (ls >> tok) {
      if (!args.empty()) args += " ";
      args += tok;
    }
    std::string cmdline =
        "--session " + dir + "/" + sess + " --format json " + args;
    CliRun first = run_cli(cmdline);
    CliRun second = run_cli(cmdline);
    if (first.code != expected) {
      why = name + ": exit " + std::to_string(first.code) + ", expected " +
            std::to_string(expected);
      return false;
    }
    if (first.out != second.out) {
      why = name + ": output changed between identical runs";
      return false;
    }
    bool ok = true;
    std::string golden = slurp(dir + "/golden/" + name + ".json", ok);
    if (!ok) {
      why = name + ": missing golden file";
      return false;
    }
    if (first.out != golden) {
      why = name + ": output diverged from the golden file";
      return false;
    }
    ++n;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  if (secs >= 300.0) {
    why = "CLI corpus exceeded the 5 minute budget";
    return false;
  }
  why = std::to_string(n) + " commands, byte-stable and golden-exact";
  return true;
}

}  // namespace

int main() {
  unsetenv("REGSEQ_DEGREE_CAP");
  std::cout << "regseq acceptance suite\n";

  criterion(1, "golden example on GF(32003) and QQ with revalidated witness",
            crit1_golden);

  Corpus corpus = build_corpus(220, 20260816);
  criterion(2, "randomized theorem cross-checks stay consistent",
            [&](std::string& why) { return crit2_theorem_corpus(corpus, why); });
  criterion(3, "strong regularity equals regularity of every prefix",
            [&](std::string& why) {
              return crit3_strong_vs_prefixes(corpus, why);
            });
  criterion(4, "plain regularity is permutation invariant",
            [&](std::string& why) { return crit4_permutations(corpus, why); });
  criterion(5, "Ext depth equals Koszul depth on graded modules",
            crit5_depth_agreement);
  criterion(6, "support-comparison corollary pairs behave",
            crit6_corollary_pairs);
  criterion(7, "homogeneous sops on CM fixtures are regular",
            crit7_cm_sops);
  criterion(8, "Hilbert functions and brute-force colon/kernel checks",
            crit8_hilbert_and_brute);
  criterion(9, "verdicts survive adjoining a fresh variable",
            [&](std::string& why) { return crit9_flat_extension(corpus, why); });
  criterion(10, "CLI corpus: golden JSON, byte stability, exit codes",
            crit10_cli_corpus);

  if (g_failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << g_failures << " acceptance criteria FAILED\n";
  return g_failures;
}
