#include "idcode/verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <thread>

#include "json.hpp"

#include "idcode/code_solver.hpp"
#include "idcode/enumerate.hpp"
#include "idcode/errors.hpp"
#include "idcode/family.hpp"
#include "idcode/io.hpp"
#include "idcode/set_system.hpp"

namespace idcode {

namespace detail {

void run_indexed(std::uint64_t count, int workers, const InstanceCheck& check,
                 std::vector<VerifyFailure>& failures, std::uint64_t& failures_total) {
  workers = std::clamp(workers, 1, 64);
  if (count == 0) return;
  if (static_cast<std::uint64_t>(workers) > count)
    workers = static_cast<int>(count);

  std::vector<std::vector<VerifyFailure>> local(workers);
  auto run_range = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      try {
        if (auto f = check(i)) local[w].push_back(std::move(*f));
      } catch (const std::exception& e) {
        local[w].push_back(
            VerifyFailure{i, "", "instance check completes", std::string("exception: ") + e.what()});
      }
    }
  };

  if (workers == 1) {
    run_range(0, 0, count);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * w;
      const std::uint64_t hi = std::min(count, chunk * (w + 1));
      if (lo >= hi) break;
      threads.emplace_back(run_range, w, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  for (auto& batch : local) {
    for (auto& f : batch) {
      ++failures_total;
      if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(f));
    }
  }
}

}  // namespace detail

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed) ^ splitmix64(~index));
}

// Unbiased draw from [0, n); implementation-independent, unlike
// std::uniform_int_distribution.
int uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<int>(x % n);
}

std::uint64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Ascending positions of the rank-th k-combination of [0, pool),
// combinations ordered lexicographically.
std::vector<int> unrank_combination(std::uint64_t rank, int k, int pool) {
  std::vector<int> out;
  out.reserve(k);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      const std::uint64_t with_x = binom(pool - 1 - x, k - 1 - i);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    out.push_back(x);
    ++x;
  }
  return out;
}

struct Check {
  bool ok = true;
  std::string expected;
  std::string actual;
};

std::optional<VerifyFailure> failure_from(std::uint64_t index, std::string instance,
                                          const Check& c) {
  if (c.ok) return std::nullopt;
  return VerifyFailure{index, std::move(instance), c.expected, c.actual};
}

// ---- digraph sweeps --------------------------------------------------------

Check check_gamma_bounds(const Digraph& d) {
  if (find_twins(d)) return {};
  const int n = d.order();
  const int gs = min_separating_code(d).size;
  const int gid = min_identifying_code(d).size;
  if (gs > n - 1)
    return {false, "gamma_s <= n - 1",
            "gamma_s = " + std::to_string(gs) + " with n = " + std::to_string(n)};
  if (!(gs <= gid && gid <= gs + 1))
    return {false, "gamma_s <= gamma_id <= gamma_s + 1",
            "gamma_s = " + std::to_string(gs) + ", gamma_id = " + std::to_string(gid)};
  return {};
}

Check check_extremal_digraphs(const Digraph& d) {
  if (find_twins(d)) return {};
  const int n = d.order();
  const bool whole = min_identifying_code(d).size == n;
  const bool member = recognize_family(d).has_value();
  if (whole != member)
    return {false, "gamma_id = n exactly on the closure family",
            std::string("gamma_id = n: ") + (whole ? "true" : "false") +
                ", family member: " + (member ? "true" : "false")};
  return {};
}

Check check_prop4(const Digraph& d) {
  if (find_twins(d)) return {};
  const int n = d.order();
  const bool lhs = min_identifying_code(d).size == n;
  bool rhs = min_separating_code(d).size == n - 1;
  if (rhs) {
    for (int x = 0; x < n && rhs; ++x) {
      VertexSet code = VertexSet::full(n);
      code.erase(x);
      const CodeReport rep = check_code(d, code);
      if (rep.separating && rep.dominating) rhs = false;
    }
  }
  if (lhs != rhs)
    return {false,
            "gamma_id = n iff gamma_s = n - 1 and every minimum separating code "
            "leaves an undominated vertex",
            std::string("lhs: ") + (lhs ? "true" : "false") + ", rhs: " +
                (rhs ? "true" : "false")};
  return {};
}

Check check_symmetric_arc(const Digraph& d) {
  if (find_twins(d) || !has_symmetric_pair(d)) return {};
  const int n = d.order();
  const int gid = min_identifying_code(d).size;
  if (gid > n - 1)
    return {false, "gamma_id <= n - 1 in the presence of a symmetric pair",
            "gamma_id = " + std::to_string(gid) + " with n = " + std::to_string(n)};
  return {};
}

// ---- system sweeps ---------------------------------------------------------

bool traces_distinct_without(const SetSystem& sys, int x) {
  const std::uint64_t keep = VertexSet::full(sys.ground_size).bits() & ~bit(x);
  for (int i = 0; i < sys.set_count(); ++i)
    for (int j = i + 1; j < sys.set_count(); ++j)
      if ((sys.sets[i].bits() & keep) == (sys.sets[j].bits() & keep)) return false;
  return true;
}

bool traces_nonempty_without(const SetSystem& sys, std::uint64_t removed) {
  for (const VertexSet& s : sys.sets)
    if ((s.bits() & ~removed) == 0) return false;
  return true;
}

bool traces_distinct_without_mask(const SetSystem& sys, std::uint64_t removed) {
  for (int i = 0; i < sys.set_count(); ++i)
    for (int j = i + 1; j < sys.set_count(); ++j)
      if ((sys.sets[i].bits() & ~removed) == (sys.sets[j].bits() & ~removed))
        return false;
  return true;
}

Check check_bondy(const SetSystem& sys) {
  int x = 0;
  try {
    x = bondy_element(sys);
  } catch (const std::exception& e) {
    return {false, "a deletable element exists", std::string("error: ") + e.what()};
  }
  if (!traces_distinct_without(sys, x))
    return {false, "returned element keeps all traces distinct",
            "element " + std::to_string(x) + " merges two traces"};
  return {};
}

bool certificate_valid(const SetSystem& sys, const ExtremalCertificate& cert) {
  const int n = sys.set_count();
  if (cert.digraph.order() != n || cert.forest.size() != n ||
      static_cast<int>(cert.matching.size()) != n)
    return false;
  if (transitive_closure(cert.forest.as_digraph()) != cert.digraph) return false;
  const auto recognized = recognize_family(cert.digraph);
  if (!recognized || !(*recognized == cert.forest)) return false;
  std::uint64_t used = 0;
  for (int e : cert.matching) {
    if (e < 0 || e >= sys.ground_size) return false;
    used |= bit(e);
  }
  if (std::popcount(used) != n) return false;
  for (int i = 0; i < n; ++i) {
    std::uint64_t mapped = 0;
    for (std::uint64_t rest = cert.digraph.in_ball_bits(i); rest != 0; rest &= rest - 1)
      mapped |= bit(cert.matching[std::countr_zero(rest)]);
    if (mapped != sys.sets[i].bits()) return false;
  }
  return true;
}

Check check_extremal_systems(const SetSystem& sys) {
  const DirectExtremalCheck direct = is_extremal_direct(sys);
  const CharacterizedExtremalCheck characterized = is_extremal_characterized(sys);
  ExtremalWitness witness;
  try {
    witness = extremal_witness(sys);
  } catch (const std::exception& e) {
    return {false, "constructive extremality check completes",
            std::string("error: ") + e.what()};
  }
  if (direct.extremal != characterized.extremal ||
      direct.extremal != witness.extremal())
    return {false, "direct, characterized and constructive checks agree",
            std::string("direct: ") + (direct.extremal ? "true" : "false") +
                ", characterized: " + (characterized.extremal ? "true" : "false") +
                ", constructive: " + (witness.extremal() ? "true" : "false")};
  if (witness.extremal()) {
    if (!certificate_valid(sys, *witness.certificate))
      return {false, "certificate digraph is a family member matching the system",
              "certificate validation failed"};
  } else {
    const int x = *witness.good_element;
    if (!(traces_nonempty_without(sys, bit(x)) && traces_distinct_without(sys, x)))
      return {false, "good element keeps traces nonempty and distinct",
              "element " + std::to_string(x) + " does not"};
  }
  return {};
}

// ---- sampled sweeps --------------------------------------------------------

Check check_prop6_sample(std::mt19937_64& rng, std::string& instance) {
  const int m = 2 + uniform_below(rng, 9);       // |X| in [2, 10]
  const int k = 1 + uniform_below(rng, m - 1);   // |A| in [1, m-1]
  std::vector<std::uint64_t> masks;
  while (static_cast<int>(masks.size()) < k) {
    const std::uint64_t mask = 1 + uniform_below(rng, (std::uint64_t{1} << m) - 1);
    if (std::find(masks.begin(), masks.end(), mask) == masks.end())
      masks.push_back(mask);
  }
  const SetSystem sys = SetSystem::from_masks(m, masks);
  instance = serialize_set_system(sys);

  VertexSet removed(0);
  try {
    removed = bondy_reduce_nonempty(sys);
  } catch (const std::exception& e) {
    return {false, "reduction succeeds", std::string("error: ") + e.what()};
  }
  if (removed.size() != m - k)
    return {false, "removal set has size |X| - |A| = " + std::to_string(m - k),
            "size " + std::to_string(removed.size())};
  if (!traces_nonempty_without(sys, removed.bits()))
    return {false, "all traces nonempty", "an empty trace remains"};
  if (!traces_distinct_without_mask(sys, removed.bits()))
    return {false, "all traces distinct", "two traces coincide"};
  return {};
}

Check check_induction_bound_sample(std::mt19937_64& rng, std::string& instance) {
  const int n = 1 + uniform_below(rng, 6);  // n in [1, 6]
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        switch (uniform_below(rng, 4)) {
          case 1: arcs.push_back({i, j}); break;
          case 2: arcs.push_back({j, i}); break;
          case 3: arcs.push_back({i, j}); arcs.push_back({j, i}); break;
          default: break;
        }
      }
    }
    const Digraph d(n, arcs);
    if (find_twins(d)) continue;
    const std::uint64_t s_mask = uniform_below(rng, std::uint64_t{1} << n);
    const VertexSet s(n, s_mask);
    const Digraph rest = induced_subgraph(d, s.complement());
    if (find_twins(rest)) continue;

    instance = serialize_digraph(d) + "S=" + s.to_string();
    const int gid = min_identifying_code(d).size;
    const int gid_rest = min_identifying_code(rest).size;
    if (gid > gid_rest + s.size())
      return {false, "gamma_id(D) <= gamma_id(D - S) + |S|",
              "gamma_id(D) = " + std::to_string(gid) + ", gamma_id(D - S) = " +
                  std::to_string(gid_rest) + ", |S| = " + std::to_string(s.size())};
    return {};
  }
  return {false, "twin-free sample found", "rejection sampling exhausted"};
}

// ---- runners ---------------------------------------------------------------

using DigraphCheck = Check (*)(const Digraph&);
using SystemCheck = Check (*)(const SetSystem&);

void run_digraph_sweep(VerifyReport& r, DigraphCheck check) {
  const VerifyParams& p = r.params;
  const int limit = p.oriented ? 5 : 4;
  if (p.max_n < 1 || p.max_n > limit)
    throw GuardError("max_n must be in [1, " + std::to_string(limit) + "] for " +
                     (p.oriented ? std::string("oriented") : std::string("all")) +
                     "-mode digraph sweeps");
  const EnumMode mode = p.oriented ? EnumMode::kOriented : EnumMode::kAll;
  std::uint64_t offset = 0;
  for (int n = 1; n <= p.max_n; ++n) {
    const DigraphEnumerator enumerator(n, mode);
    detail::run_indexed(
        enumerator.count(), p.workers,
        [&](std::uint64_t i) -> std::optional<VerifyFailure> {
          const Digraph d = enumerator.at(i);
          return failure_from(offset + i, serialize_digraph(d), check(d));
        },
        r.failures, r.failures_total);
    offset += enumerator.count();
  }
  r.instances_checked = offset;
}

void run_system_sweep(VerifyReport& r, bool allow_empty, SystemCheck check) {
  const VerifyParams& p = r.params;
  if (p.max_n < 1 || p.max_n > 5)
    throw GuardError("max_n must be in [1, 5] for set-system sweeps");
  const int n = p.max_n;
  const int pool = (1 << n) - (allow_empty ? 0 : 1);
  const std::uint64_t count = binom(pool, n);
  detail::run_indexed(
      count, p.workers,
      [&](std::uint64_t rank) -> std::optional<VerifyFailure> {
        const std::vector<int> positions = unrank_combination(rank, n, pool);
        std::vector<std::uint64_t> masks;
        masks.reserve(n);
        for (int pos : positions)
          masks.push_back(static_cast<std::uint64_t>(pos) + (allow_empty ? 0 : 1));
        const SetSystem sys = SetSystem::from_masks(n, masks);
        return failure_from(rank, serialize_set_system(sys), check(sys));
      },
      r.failures, r.failures_total);
  r.instances_checked = count;
}

void run_sampled_sweep(VerifyReport& r,
                       Check (*check)(std::mt19937_64&, std::string&)) {
  const VerifyParams& p = r.params;
  if (p.samples < 1 || p.samples > 1000000)
    throw GuardError("samples must be in [1, 1000000]");
  detail::run_indexed(
      static_cast<std::uint64_t>(p.samples), p.workers,
      [&](std::uint64_t i) -> std::optional<VerifyFailure> {
        std::mt19937_64 rng = sample_rng(p.seed, i);
        std::string instance;
        const Check c = check(rng, instance);
        return failure_from(i, instance, c);
      },
      r.failures, r.failures_total);
  r.instances_checked = static_cast<std::uint64_t>(p.samples);
}

}  // namespace

std::vector<std::string> known_theorems() {
  return {"gamma-bounds", "extremal-digraphs", "prop4", "symmetric-arc",
          "bondy", "extremal-systems", "prop6", "induction-bound"};
}

VerifyReport verify(const std::string& theorem_id, const VerifyParams& params) {
  VerifyReport r;
  r.theorem_id = theorem_id;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();

  if (theorem_id == "gamma-bounds") {
    run_digraph_sweep(r, check_gamma_bounds);
  } else if (theorem_id == "extremal-digraphs") {
    run_digraph_sweep(r, check_extremal_digraphs);
  } else if (theorem_id == "prop4") {
    run_digraph_sweep(r, check_prop4);
  } else if (theorem_id == "symmetric-arc") {
    run_digraph_sweep(r, check_symmetric_arc);
  } else if (theorem_id == "bondy") {
    run_system_sweep(r, /*allow_empty=*/true, check_bondy);
  } else if (theorem_id == "extremal-systems") {
    run_system_sweep(r, /*allow_empty=*/false, check_extremal_systems);
  } else if (theorem_id == "prop6") {
    run_sampled_sweep(r, check_prop6_sample);
  } else if (theorem_id == "induction-bound") {
    run_sampled_sweep(r, check_induction_bound_sample);
  } else {
    throw Error("unknown theorem id '" + theorem_id + "'");
  }

  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

std::string report_to_text(const VerifyReport& r) {
  std::string out;
  out += "theorem: " + r.theorem_id + "\n";
  out += "params: max_n=" + std::to_string(r.params.max_n) +
         " samples=" + std::to_string(r.params.samples) +
         " seed=" + std::to_string(r.params.seed) +
         " workers=" + std::to_string(r.params.workers) +
         " oriented=" + (r.params.oriented ? "true" : "false") + "\n";
  out += "instances checked: " + std::to_string(r.instances_checked) + "\n";
  out += "failures: " + std::to_string(r.failures_total) + "\n";
  for (const VerifyFailure& f : r.failures) {
    out += "  [" + std::to_string(f.index) + "] expected: " + f.expected +
           "; actual: " + f.actual + "\n";
    out += "    instance: " + f.instance + "\n";
  }
  out += "elapsed: " + std::to_string(r.elapsed.count()) + " ms\n";
  out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem_id;
  j["params"] = {{"max_n", r.params.max_n},
                 {"samples", r.params.samples},
                 {"seed", r.params.seed},
                 {"workers", r.params.workers},
                 {"oriented", r.params.oriented}};
  j["instances_checked"] = r.instances_checked;
  j["failures_total"] = r.failures_total;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const VerifyFailure& f : r.failures) {
    failures.push_back({{"index", f.index},
                        {"instance", f.instance},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  }
  j["failures"] = std::move(failures);
  j["passed"] = r.passed();
  return j.dump();
}

}  // namespace idcode
