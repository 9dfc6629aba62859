#include "reglab/search.hpp"

#include "reglab/errors.hpp"
#include "reglab/families.hpp"
#include "reglab/reduction.hpp"
#include "reglab/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

namespace reglab::search {

namespace rg = regularity;

const char* to_string(Kind k) { return k == Kind::regular ? "regular" : "hom"; }

unsigned thread_hint() {
  const char* s = std::getenv("REGLAB_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min<long>(v, 64));
}

void for_each_rgs(std::size_t n, std::size_t t, const std::function<bool(const std::vector<int>&)>& visit) {
  if (t == 0 || t > n) return;
  std::vector<int> lab(n, 0);
  bool stop = false;
  // m = blocks used by lab[0..i)
  auto rec = [&](auto&& self, std::size_t i, std::size_t m) -> void {
    if (stop) return;
    if (i == n) {
      if (m == t) stop = visit(lab);
      return;
    }
    std::size_t hi = std::min(m, t - 1);
    for (std::size_t v = 0; v <= hi && !stop; ++v) {
      std::size_t m2 = std::max(m, v + 1);
      if (n - i - 1 < t - m2) continue;
      lab[i] = static_cast<int>(v);
      self(self, i + 1, m2);
    }
  };
  rec(rec, 0, 0);
}

MinPartition min_partition_exhaustive(const AnyGraph& g, const Threshold& eps, Kind kind, const SearchOptions& opt) {
  std::size_t n = order(g);
  if (n == 0) throw DomainError("min_partition_exhaustive: empty graph");
  if (n > opt.n_cap)
    throw CapacityError("min_partition_exhaustive: " + std::to_string(n) + " vertices exceed nCap " +
                        std::to_string(opt.n_cap));
  unsigned threads = opt.threads ? opt.threads : thread_hint();

  rg::PartitionOptions po;
  po.mode = rg::Mode::exact;
  po.kind = kind == Kind::regular ? rg::CellKind::regular : rg::CellKind::homogeneous;
  po.early_exit = true;
  po.keep_cells = false;
  po.allowed_uncovered = rg::allowed_uncovered(n, arity(g), eps);

  std::vector<rg::CellCache> caches(threads);
  auto passes = [&](const std::vector<int>& lab, rg::CellCache& cache) {
    rg::PartitionOptions o = po;
    o.cache = &cache;
    return rg::check_partition(g, Partition::from_labels(lab), eps, o).pass;
  };

  constexpr std::size_t kBatch = 4096;
  MinPartition out;
  std::uint64_t examined = 0;
  std::vector<std::vector<int>> batch;
  std::optional<std::vector<int>> found;

  // index of the first passing entry, or batch.size()
  auto run_batch = [&]() -> std::size_t {
    if (threads <= 1 || batch.size() < 2 * threads) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        if (passes(batch[i], caches[0])) return i;
      return batch.size();
    }
    std::atomic<std::size_t> best{batch.size()};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < batch.size(); i += threads) {
          if (i >= best.load()) return;
          if (passes(batch[i], caches[w])) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    for (auto& th : pool) th.join();
    return best.load();
  };

  for (std::size_t t = 1; t <= n && !found; ++t) {
    auto flush = [&]() {
      std::size_t i = run_batch();
      if (i < batch.size()) {
        found = batch[i];
        examined += i + 1;
      } else {
        examined += batch.size();
      }
      batch.clear();
      return found.has_value();
    };
    for_each_rgs(n, t, [&](const std::vector<int>& lab) {
      batch.push_back(lab);
      return batch.size() == kBatch && flush();
    });
    if (!found && !batch.empty()) flush();
  }
  if (!found) throw SearchExhausted("min_partition_exhaustive: no partition passed, singletons included");
  out.partition = Partition::from_labels(*found);
  out.size = out.partition.size();
  out.examined = examined;
  return out;
}

namespace {

families::Instance sweep_instance(const std::string& family, int scale) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    return parts;
  };
  auto parts = split(family);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw DomainError("sweep family '" + family + "': missing parameter");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw DomainError("sweep family '" + family + "': bad parameter '" + parts[i] + "'");
    }
  };
  if (scale < 1) throw DomainError("sweep: scales must be positive");
  const std::string& head = parts.empty() ? family : parts[0];
  if (head == "blowup") {
    if (parts.size() != 2) throw DomainError("sweep family '" + family + "': expected blowup:<base>");
    const std::string& b = parts[1];
    families::Instance base;
    if (b == "M2") base = families::gen_matching(2);
    else if (b == "H2") base = families::gen_halfgraph(2);
    else if (b == "coM2") base = families::gen_comatching(2);
    else if (b == "U1") base = families::gen_powerset_graph(1);
    else if (b == "U2") base = families::gen_powerset_graph(2);
    else if (b == "P3") base = families::Instance{Graph(3, {{0, 1}, {1, 2}}), {}, {}, "P3"};
    else throw DomainError("sweep: unknown blowup base '" + b + "'");
    return families::blowup(base, scale);
  }
  if (head == "edgeless") return {Graph(scale, {}), {}, {}, "edgeless"};
  if (head == "complete") {
    std::vector<Edge2> e;
    for (int i = 0; i < scale; ++i)
      for (int j = i + 1; j < scale; ++j) e.push_back({i, j});
    return {Graph(scale, e), {}, {}, "complete"};
  }
  if (head == "halfgraph") return families::gen_halfgraph(scale);
  if (head == "hkn") return families::gen_hkn(num(1), scale);
  if (head == "ukblowup_lb") return families::gen_uk_blowup_lb(num(1), scale, num(2)).g;
  throw DomainError("sweep: unknown family '" + family + "'");
}

// lower bound 1 or 2 from the one-part partition; exact when possible
struct OnePart {
  bool passes;
  bool exact;
};
OnePart one_part(const AnyGraph& g, const Threshold& eps, Kind kind) {
  Partition triv = Partition::trivial(order(g));
  if (kind == Kind::homogeneous) return {rg::check_hom_partition(g, triv, eps).pass, true};
  try {
    return {rg::check_partition(g, triv, eps).pass, true};
  } catch (const CapacityError&) {
    rg::PartitionOptions o;
    o.mode = rg::Mode::heuristic;
    auto v = rg::check_partition(g, triv, eps, o);
    return {v.pass, !v.pass};  // a heuristic failure carries an exact witness
  }
}

// an upper bound from the twin-class partition, or n
std::size_t class_upper(const AnyGraph& g, const Threshold& eps, Kind kind) {
  auto tc = reduction::twin_classes(g);
  try {
    bool ok = kind == Kind::regular ? rg::check_partition(g, tc.partition, eps).pass
                                    : rg::check_hom_partition(g, tc.partition, eps).pass;
    if (ok) return tc.partition.size();
  } catch (const CapacityError&) {
  }
  return order(g);
}

}  // namespace

SweepResult growth_sweep(const std::string& family, const std::vector<int>& scales, const std::vector<Rational>& eps,
                         Kind kind, const SearchOptions& opt) {
  SweepResult out;
  for (const auto& e : eps)
    if (e <= 0 || e >= 1) throw DomainError("sweep: eps must lie in (0, 1), got " + e.str());
  for (const auto& e : eps) {
    for (int s : scales) {
      auto inst = sweep_instance(family, s);
      auto t0 = std::chrono::steady_clock::now();
      SweepRecord r;
      r.family = family;
      r.params = "scale=" + std::to_string(s);
      r.eps = e;
      r.vertices = inst.n();
      if (inst.n() <= opt.n_cap) {
        auto mp = min_partition_exhaustive(inst.graph, e, kind, opt);
        r.size_lower = r.size_upper = mp.size;
        r.method = "exhaustive";
        r.certified = true;
      } else {
        r.size_upper = class_upper(inst.graph, e, kind);
        auto op = one_part(inst.graph, e, kind);
        r.size_lower = op.passes ? 1 : 2;
        if (op.passes) r.size_upper = std::min<std::size_t>(r.size_upper, op.exact ? 1 : r.size_upper);
        r.method = "constructed-upper+witness-lower";
        r.certified = op.exact && r.size_lower == r.size_upper;
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.records.push_back(r);
    }
    std::vector<const SweepRecord*> seq;
    for (auto& r : out.records)
      if (r.eps == e) seq.push_back(&r);
    bool all_cert = std::all_of(seq.begin(), seq.end(), [](auto* r) { return r->certified; });
    bool constant = true, nondecreasing = true;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      constant = constant && seq[i]->size_upper == seq[0]->size_upper;
      nondecreasing = nondecreasing && seq[i]->size_upper >= seq[i - 1]->size_upper;
    }
    std::string label = constant ? "constant" : nondecreasing ? "growing" : "mixed";
    if (!all_cert) label += " (upper bounds only)";
    out.classification[e.str()] = label;
  }
  return out;
}

std::string sweep_csv(const SweepResult& r, bool with_timing) {
  std::ostringstream os;
  os << "family,params,eps,size,method,certified,seconds\n";
  for (const auto& x : r.records) {
    os << x.family << ',' << x.params << ',' << x.eps.str() << ',';
    if (x.size_lower == x.size_upper) os << x.size_upper;
    else os << x.size_lower << ".." << x.size_upper;
    os << ',' << x.method << ',' << (x.certified ? "true" : "false") << ',';
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", x.seconds);
      os << buf;
    } else {
      os << '0';
    }
    os << '\n';
  }
  return os.str();
}

BigInt ceil_rational_power(const Rational& x, const Rational& e) {
  if (x < 1) throw DomainError("ceil_rational_power: base below 1");
  if (e < 0) throw DomainError("ceil_rational_power: negative exponent");
  if (e.den() > 64 || e.num() > 4096) throw CapacityError("ceil_rational_power: exponent too large");
  auto p = e.num().convert_to<unsigned>(), q = e.den().convert_to<unsigned>();
  Rational xp = x.pow(p);
  // N^q >= xp
  auto ok = [&](const BigInt& N) { return Rational(boost::multiprecision::pow(N, q), BigInt(1)) >= xp; };
  double est = std::pow(x.to_double(), e.to_double());
  if (!std::isfinite(est) || est > 1e15) throw CapacityError("ceil_rational_power: value too large");
  BigInt N = static_cast<long long>(std::ceil(est));
  if (N < 1) N = 1;
  while (N > 1 && ok(N - 1)) --N;
  while (!ok(N)) ++N;
  return N;
}

LbReport lb_blowup_experiment(const Rational& s1, const Rational& s2, const Rational& eps, int n,
                              const SearchOptions& opt) {
  if (!(0 < s1 && s1 < 1 - s1 && 1 - s1 < s2 && s2 < 1))
    throw DomainError("lb_blowup_experiment: need 0 < s1 < 1-s1 < s2 < 1, got s1=" + s1.str() + " s2=" + s2.str());
  if (eps <= 0 || eps >= 1) throw DomainError("lb_blowup_experiment: eps must lie in (0, 1)");
  if (n < 1) throw DomainError("lb_blowup_experiment: n must be positive");
  LbReport r;
  r.s1 = s1;
  r.s2 = s2;
  r.eps = eps;
  r.n = n;
  BigInt m = (eps.inverse() / 4).ceil();
  if (m > 64) throw CapacityError("lb_blowup_experiment: m = " + m.str() + " is beyond the generator guard");
  r.m = m.convert_to<int>();
  r.degenerate = r.m == 1;
  r.bound = ceil_rational_power(eps.inverse(), s2);
  r.vertices = static_cast<std::size_t>(2 * r.m) * n;
  if (r.vertices <= opt.n_cap) {
    auto inst = families::blowup(families::gen_halfgraph(r.m), n);
    auto mp = min_partition_exhaustive(inst.graph, eps, Kind::regular, opt);
    r.size = mp.size;
    r.bound_met = BigInt(mp.size) >= r.bound;
    r.method = "exhaustive";
    r.certified = true;
  } else {
    r.method = "construction-only (above nCap)";
  }
  return r;
}

namespace {

TowerValue pow2(std::string kind, int arg, const BigInt& e) {
  TowerValue t;
  t.kind = std::move(kind);
  t.arg = arg;
  if (e + 1 > kTowerBitBudget) {
    t.overflow = true;
    return t;
  }
  t.exponent = e;
  t.value = BigInt(1) << e.convert_to<std::size_t>();
  return t;
}

TowerValue overflowed(std::string kind, int arg) {
  TowerValue t;
  t.kind = std::move(kind);
  t.arg = arg;
  t.overflow = true;
  return t;
}

}  // namespace

std::string TowerValue::str() const {
  if (overflow) return "overflow";
  if (exponent && *exponent > 256) return "2^" + exponent->str();
  return value.str();
}

TowerValue tower(int i) {
  if (i < 1) throw DomainError("tower: argument must be >= 1");
  TowerValue t;
  t.kind = "Tw";
  t.arg = 1;
  t.value = 1;
  for (int j = 2; j <= i; ++j) {
    t = pow2("Tw", j, t.value);
    if (t.overflow) return overflowed("Tw", i);
  }
  return t;
}

TowerValue chung_f(int x) {
  if (x < 1) throw DomainError("chung_f: argument must be >= 1");
  TowerValue t;
  t.kind = "f";
  t.arg = std::min(x, 3);
  t.value = 3;
  for (int j = 4; j <= x; ++j) {
    const BigInt& f = t.value;
    BigInt c = f < 3 ? BigInt(0) : f * (f - 1) * (f - 2) / 6;
    t = pow2("f", j, c);
    if (t.overflow) return overflowed("f", x);
  }
  t.arg = x;
  return t;
}

TowerValue tower_f(int x, bool literal) {
  if (x < 1) throw DomainError("tower_f: argument must be >= 1");
  std::string kind = literal ? "Twf-literal" : "Twf-iterated";
  if (x == 1) {
    TowerValue t = chung_f(1);
    t.kind = kind;
    return t;
  }
  TowerValue prev = literal ? chung_f(x - 1) : tower_f(x - 1, false);
  if (prev.overflow) return overflowed(kind, x);
  return pow2(kind, x, prev.value);
}

UkLbReport ukblowup_lb_verify(int K, int n, int smallSide, const Rational& eps, std::size_t cap) {
  if (eps <= 0 || eps >= 1) throw DomainError("ukblowup_lb_verify: eps must lie in (0, 1)");
  auto inst = families::gen_uk_blowup_lb(K, n, smallSide);
  UkLbReport r;
  r.K = K;
  r.n = n;
  r.small_side = smallSide;
  r.eps = eps;
  r.vertices = inst.g.n();
  if (r.vertices <= cap) {
    SearchOptions o;
    o.n_cap = cap;
    auto mp = min_partition_exhaustive(inst.g.graph, eps, Kind::regular, o);
    r.size = mp.size;
    r.size_lower = mp.size;
    r.method = "exhaustive";
    r.certified = true;
  } else {
    auto op = one_part(inst.g.graph, eps, Kind::regular);
    r.size_lower = op.passes ? 1 : 2;
    r.method = "witness-lower";
    r.certified = false;
  }
  return r;
}

}  // namespace reglab::search
