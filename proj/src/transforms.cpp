#include "reglab/transforms.hpp"

#include "reglab/core.hpp"
#include "reglab/errors.hpp"

#include <algorithm>

namespace reglab::transforms {

using regularity::CellKind;
using regularity::PartitionOptions;

void require_verified(const TransferReport& r) {
  if (r.input_checked && !r.input_ok)
    throw ContractError(r.transfer + ": input partition fails its " + r.input_contract.kind + " contract at " +
                        r.input_contract.threshold.str());
  if (r.actual_parts > r.claimed_bound)
    throw ContractError(r.transfer + ": " + std::to_string(r.actual_parts) + " parts exceed the bound " +
                        std::to_string(r.claimed_bound));
  if (r.output_checked && !r.verified)
    throw ContractError(r.transfer + ": output partition fails its " + r.output_contract.kind + " contract at " +
                        r.output_contract.threshold.str());
}

namespace {

Partition nonempty_partition(std::size_t n, std::vector<VertexSet> parts) {
  std::erase_if(parts, [](const VertexSet& s) { return s.empty(); });
  return Partition(n, std::move(parts));
}

bool check_contract(const AnyGraph& g, const Partition& p, const Contract& c,
                    std::optional<regularity::PartitionVerdict>* keep = nullptr) {
  PartitionOptions o;
  o.kind = c.kind == "homogeneous" ? CellKind::homogeneous : CellKind::regular;
  auto v = regularity::check_partition(g, p, c.threshold, o);
  bool pass = v.pass;
  if (keep) *keep = std::move(v);
  return pass;
}

void finalize(TransferReport& r, const TransferOptions& opt) {
  r.actual_parts = r.output.size();
  if (opt.verify_output) {
    r.output_checked = true;
    bool ok = check_contract(r.target, r.output, r.output_contract, &r.output_verdict);
    r.verified = ok && r.input_ok && r.actual_parts <= r.claimed_bound;
  } else {
    r.verified = false;
  }
}

void check_input(TransferReport& r, const AnyGraph& g, const TransferOptions& opt) {
  if (!opt.verify_input) return;
  r.input_checked = true;
  r.input_ok = check_contract(g, r.input, r.input_contract);
}

Rational ll(std::size_t v) { return Rational(static_cast<long long>(v)); }

}  // namespace

TransferReport bip_transfer(const Graph& g, const Partition& p, const Rational& eps, const std::optional<VertexSet>& z2,
                            const TransferOptions& opt) {
  if (eps <= 0) throw DomainError("bip_transfer: eps must be positive");
  std::size_t n = g.n();
  if (p.n() != n) throw DomainError("bip_transfer: partition is over the wrong vertex set");
  VertexSet Z2 = z2 ? *z2 : VertexSet::full(n);
  if (Z2.universe() != n) throw DomainError("bip_transfer: z2 over the wrong vertex set");

  std::vector<int> brank(n, -1);
  int nb = 0;
  Z2.for_each([&](int v) { brank[v] = nb++; });
  std::size_t N = n + nb;
  std::vector<Edge2> es;
  for (auto& e : g.edges()) {
    if (brank[e[1]] >= 0) es.push_back({e[0], static_cast<int>(n) + brank[e[1]]});
    if (brank[e[0]] >= 0) es.push_back({e[1], static_cast<int>(n) + brank[e[0]]});
  }

  TransferReport r;
  r.transfer = "bip";
  r.input = p;
  r.target = Graph(N, std::move(es));
  r.input_contract = {"regular", Threshold(eps.pow(9))};
  r.output_contract = {"regular", Threshold(2 * eps)};
  r.claimed_bound = 2 * p.size() + 1;
  check_input(r, g, opt);

  if (ll(nb) <= eps.pow(3) * ll(N)) {
    r.branch = "single-part";
    r.output = Partition::trivial(N);
  } else {
    r.branch = "split";
    std::vector<VertexSet> parts;
    VertexSet b0(N);
    std::vector<VertexSet> bs;
    for (auto& part : p.parts()) {
      VertexSet a(N), b(N);
      part.for_each([&](int v) {
        a.insert(v);
        if (brank[v] >= 0) b.insert(static_cast<int>(n) + brank[v]);
      });
      parts.push_back(a);
      if (ll(b.size()) < eps.pow(5) * ll(part.size())) b0 |= b;
      else bs.push_back(b);
    }
    parts.push_back(b0);
    for (auto& b : bs) parts.push_back(b);
    r.output = nonempty_partition(N, std::move(parts));
  }
  finalize(r, opt);
  return r;
}

TransferReport trip_transfer(const ThreeGraph& h, const Partition& p, const Rational& eps,
                             const std::optional<VertexSet>& z2, const std::optional<VertexSet>& z3,
                             const TransferOptions& opt) {
  if (eps <= 0) throw DomainError("trip_transfer: eps must be positive");
  std::size_t n = h.n();
  if (p.n() != n) throw DomainError("trip_transfer: partition is over the wrong vertex set");
  VertexSet Z2 = z2 ? *z2 : VertexSet::full(n);
  VertexSet Z3 = z3 ? *z3 : VertexSet::full(n);
  if (Z2.universe() != n || Z3.universe() != n) throw DomainError("trip_transfer: z2/z3 over the wrong vertex set");

  std::vector<int> brank(n, -1), crank(n, -1);
  int nb = 0, nc = 0;
  Z2.for_each([&](int v) { brank[v] = nb++; });
  Z3.for_each([&](int v) { crank[v] = nc++; });
  int ni = static_cast<int>(n);
  std::size_t N = n + nb + nc;
  auto bidx = [&](int v) { return ni + brank[v]; };
  auto cidx = [&](int v) { return ni + nb + crank[v]; };
  std::vector<Edge3> es;
  for (auto e : h.edges()) {
    std::sort(e.begin(), e.end());
    do {
      if (brank[e[1]] >= 0 && crank[e[2]] >= 0) es.push_back({e[0], bidx(e[1]), cidx(e[2])});
    } while (std::next_permutation(e.begin(), e.end()));
  }

  TransferReport r;
  r.transfer = "trip";
  r.input = p;
  r.target = ThreeGraph(N, std::move(es));
  r.input_contract = {"regular", Threshold(eps.pow(12))};
  r.output_contract = {"regular", Threshold(eps)};
  r.claimed_bound = 3 * p.size() + 2;
  check_input(r, h, opt);

  Rational small = eps.pow(4) * ll(N);
  if (ll(nb) <= small || ll(nc) <= small) {
    r.branch = "single-part";
    r.output = Partition::trivial(N);
  } else {
    r.branch = "split";
    std::vector<VertexSet> as, bs, cs;
    VertexSet b0(N), c0(N);
    Rational bucket = eps.pow(8);
    for (auto& part : p.parts()) {
      VertexSet a(N), b(N), c(N);
      part.for_each([&](int v) {
        a.insert(v);
        if (brank[v] >= 0) b.insert(bidx(v));
        if (crank[v] >= 0) c.insert(cidx(v));
      });
      as.push_back(a);
      if (ll(b.size()) < bucket * ll(part.size())) b0 |= b;
      else bs.push_back(b);
      if (ll(c.size()) < bucket * ll(part.size())) c0 |= c;
      else cs.push_back(c);
    }
    std::vector<VertexSet> parts = as;
    parts.insert(parts.end(), bs.begin(), bs.end());
    parts.insert(parts.end(), cs.begin(), cs.end());
    parts.push_back(b0);
    parts.push_back(c0);
    r.output = nonempty_partition(N, std::move(parts));
  }
  finalize(r, opt);
  return r;
}

TransferReport otimes_project(const families::Instance& bip, const Partition& p, const Rational& eps,
                              const TransferOptions& opt) {
  if (eps <= 0) throw DomainError("otimes_project: eps must be positive");
  if (bip.graph.index() != 0 || !bip.has("U") || !bip.has("V"))
    throw DomainError("otimes_project: input must be a graph with bipartition labels U/V");
  const Graph& g = bip.g();
  const VertexSet& U = bip.at("U");
  const VertexSet& V = bip.at("V");
  if (U.intersects(V) || (U | V) != VertexSet::full(g.n()))
    throw DomainError("otimes_project: U and V must partition the vertex set");
  int nn = static_cast<int>(std::max(U.size(), V.size()));
  families::Instance H = families::otimes(nn, bip);
  if (p.n() != H.n()) throw DomainError("otimes_project: partition must cover n⊗g");

  TransferReport r;
  r.transfer = "otimes";
  r.input = p;
  r.target = g;
  r.input_contract = {"regular", Threshold(eps)};
  r.output_contract = {"regular", Threshold::root(eps, 18, 36)};
  r.claimed_bound = 2 * p.size() + 2;
  r.extra["n"] = std::to_string(nn);
  check_input(r, H.graph, opt);

  std::size_t total = g.n();
  std::size_t mn = std::min(U.size(), V.size());
  // min <= eps^(1/3) |U ∪ V|, compared as cubes
  if (ll(mn).pow(3) <= eps * ll(total).pow(3)) {
    r.branch = "single-part";
    r.output = Partition::trivial(total);
  } else {
    r.branch = "split";
    std::vector<VertexSet> us, vs;
    VertexSet u0(total), v0(total);
    Rational e2 = eps.pow(2);
    for (auto& part : p.parts()) {
      VertexSet ui(total), vi(total);
      part.for_each([&](int v) {
        if (v < static_cast<int>(total)) (U.contains(v) ? ui : vi).insert(v);
      });
      Rational xs3 = ll(part.size()).pow(3);
      // |U_i| <= eps^(2/3) |X_i|, compared as cubes
      if (ll(ui.size()).pow(3) <= e2 * xs3) u0 |= ui;
      else us.push_back(ui);
      if (ll(vi.size()).pow(3) <= e2 * xs3) v0 |= vi;
      else vs.push_back(vi);
    }
    std::vector<VertexSet> parts = us;
    parts.insert(parts.end(), vs.begin(), vs.end());
    parts.push_back(u0);
    parts.push_back(v0);
    r.output = nonempty_partition(total, std::move(parts));
  }
  finalize(r, opt);
  return r;
}

namespace {

// classes of the instance lying inside the given side label
int classes_inside(const families::Instance& inst, const VertexSet& side) {
  int c = 0;
  for (auto& name : inst.classes)
    if (!inst.at(name).empty() && inst.at(name).subset_of(side)) ++c;
  return c;
}

}  // namespace

TransferReport blowup_hom_project(const families::Instance& bigH, const Partition& p, const Rational& eps,
                                  const TransferOptions& opt) {
  if (eps <= 0) throw DomainError("blowup_hom_project: eps must be positive");
  if (bigH.graph.index() != 1) throw DomainError("blowup_hom_project: input must be a 3-graph");
  const ThreeGraph& h = bigH.h();
  const VertexSet& A = bigH.at("A");
  const VertexSet& B = bigH.at("B");
  const VertexSet& C = bigH.at("C");
  if (p.n() != h.n()) throw DomainError("blowup_hom_project: partition is over the wrong vertex set");

  auto ab = (A | B).to_vector();
  std::vector<int> idx(h.n(), -1);
  for (std::size_t i = 0; i < ab.size(); ++i) idx[ab[i]] = static_cast<int>(i);
  std::vector<Edge2> es;
  A.for_each([&](int a) {
    B.for_each([&](int b) {
      if (h.link(a, b).intersects(C)) es.push_back({idx[a], idx[b]});
    });
  });
  std::size_t N = ab.size();

  TransferReport r;
  r.transfer = "blowup-hom";
  r.input = p;
  r.target = Graph(N, std::move(es));
  r.input_contract = {"homogeneous", Threshold(eps)};
  r.output_contract = {"homogeneous", Threshold::root(eps, 2)};
  r.claimed_bound = p.size();
  check_input(r, bigH.graph, opt);

  r.branch = "split";
  std::vector<VertexSet> parts;
  for (auto& part : p.parts()) {
    VertexSet d(N);
    part.for_each([&](int v) {
      if (idx[v] >= 0) d.insert(idx[v]);
    });
    parts.push_back(d);
  }
  r.output = nonempty_partition(N, std::move(parts));

  int ku = classes_inside(bigH, A), kv = classes_inside(bigH, B);
  int m = std::min(ku, kv);
  r.extra["claimed_threshold"] = "eps^(1/D)";
  r.extra["proof_threshold"] = r.output_contract.threshold.str();
  r.extra["small_regime"] = (m > 0 && eps < Rational(1, m).pow(8)) ? "true" : "false";
  finalize(r, opt);
  std::string achieved = "none";
  for (unsigned d = 1; d <= 8; ++d)
    if (check_contract(r.target, r.output, {"homogeneous", Threshold::root(eps, d)})) {
      achieved = "eps^(1/" + std::to_string(d) + ")";
      break;
    }
  r.extra["achieved_threshold"] = achieved;
  return r;
}

BlowupRegHom check_blowup_reg_is_hom(const families::Instance& bigH, const Partition& p, const Rational& mu,
                                     bool verify_regular) {
  if (bigH.graph.index() != 1) throw DomainError("check_blowup_reg_is_hom: input must be a 3-graph");
  BlowupRegHom out;
  out.k1 = classes_inside(bigH, bigH.at("B"));
  if (mu <= 0 || out.k1 == 0 || mu >= Rational(1, 2 * out.k1))
    throw ContractError("check_blowup_reg_is_hom: mu must lie in (0, 1/(2 K1)) with K1 = " + std::to_string(out.k1));
  if (verify_regular && !regularity::check_partition(bigH.graph, p, Threshold(mu)).pass)
    throw ContractError("check_blowup_reg_is_hom: partition is not mu-regular");
  out.hom = regularity::check_hom_partition(bigH.graph, p, Threshold(4 * mu));
  out.holds = out.hom.pass;
  return out;
}

TransferReport exp_class_partition(const families::Instance& inst, const Rational& eps,
                                   const ClassPartitionOptions& opt) {
  if (eps <= 0 || eps >= 1) throw DomainError("exp_class_partition: eps must lie in (0,1)");
  if (eps < opt.min_eps) throw CapacityError("exp_class_partition: eps below the configured floor " + opt.min_eps.str());
  if (inst.graph.index() != 1) throw DomainError("exp_class_partition: input must be a 3-graph");
  const ThreeGraph& h = inst.h();
  std::size_t n = h.n();
  int k = 0;
  while (inst.has(families::index_label("U", k + 1))) ++k;
  if (k == 0) throw DomainError("exp_class_partition: missing U_i labels");
  auto get = [&](const std::string& name) { return inst.has(name) ? inst.at(name) : VertexSet(n); };
  std::vector<VertexSet> Ui, Vi, Ws;
  VertexSet U(n), V(n), W(n);
  for (int i = 1; i <= k; ++i) {
    Ui.push_back(get(families::index_label("U", i)));
    Vi.push_back(get(families::index_label("V", i)));
    U |= Ui.back();
    V |= Vi.back();
  }
  for (unsigned s = 0; s < (1u << k); ++s) {
    Ws.push_back(get(families::set_label("W", s)));
    W |= Ws.back();
  }
  if ((U | V | W) != VertexSet::full(n)) throw DomainError("exp_class_partition: labels do not cover the vertex set");

  TransferReport r;
  r.transfer = "exp-class";
  r.input = Partition::trivial(n);
  r.target = inst.graph;
  r.output_contract = {"homogeneous", Threshold(5 * eps)};

  std::size_t mn = std::min({U.size(), V.size(), W.size()});
  if (ll(mn) <= eps * ll(n)) {
    r.branch = "single-part";
    r.output = Partition::trivial(n);
    r.claimed_bound = 1;
    r.extra["J"] = "0";
  } else {
    r.branch = "split";
    std::vector<int> fu, fv;
    std::vector<unsigned> J;
    VertexSet u0 = U, v0 = V, w0 = W;
    for (int i = 0; i < k; ++i) {
      if (!Ui[i].empty() && ll(Ui[i].size()) >= eps.pow(10) * ll(U.size())) {
        fu.push_back(i);
        u0 -= Ui[i];
      }
      if (!Vi[i].empty() && ll(Vi[i].size()) >= eps.pow(10) * ll(V.size())) {
        fv.push_back(i);
        v0 -= Vi[i];
      }
    }
    for (unsigned s = 0; s < (1u << k); ++s)
      if (!Ws[s].empty() && ll(Ws[s].size()) >= eps.pow(4) * ll(W.size())) {
        J.push_back(s);
        w0 -= Ws[s];
      }
    // atoms of the Boolean algebra generated by J: indices grouped by membership
    std::vector<std::vector<int>> atoms;
    std::vector<std::uint64_t> sig;
    for (int i = 0; i < k; ++i) {
      std::uint64_t m = 0;
      for (std::size_t j = 0; j < J.size(); ++j)
        if (J[j] >> i & 1) m |= std::uint64_t{1} << j;
      auto it = std::find(sig.begin(), sig.end(), m);
      if (it == sig.end()) {
        sig.push_back(m);
        atoms.push_back({i});
      } else {
        atoms[it - sig.begin()].push_back(i);
      }
    }
    std::vector<VertexSet> parts;
    for (unsigned s : J) parts.push_back(Ws[s]);
    std::vector<VertexSet> iu, iv;
    for (auto& atom : atoms) {
      VertexSet a(n), b(n);
      for (int i : atom) {
        if (std::find(fu.begin(), fu.end(), i) != fu.end()) a |= Ui[i];
        if (std::find(fv.begin(), fv.end(), i) != fv.end()) b |= Vi[i];
      }
      iu.push_back(a);
      iv.push_back(b);
      parts.push_back(b);
    }
    for (auto& a : iu) parts.push_back(a);
    parts.push_back(u0);
    parts.push_back(v0);
    parts.push_back(w0);
    r.output = nonempty_partition(n, std::move(parts));
    r.claimed_bound = J.size() >= 60 ? SIZE_MAX : (std::size_t{8} << J.size());
    r.extra["J"] = std::to_string(J.size());
    r.extra["atoms"] = std::to_string(atoms.size());

    bool extreme = true;
    for (std::size_t a = 0; a < atoms.size(); ++a)
      for (std::size_t b = 0; b < atoms.size(); ++b)
        for (unsigned s : J) {
          if (iu[a].empty() || iv[b].empty()) continue;
          Rational d = core::density3(h, iu[a], iv[b], Ws[s]);
          if (d != 0 && d != 1) extreme = false;
        }
    r.extra["core_cells_extreme"] = extreme ? "true" : "false";
  }

  // every cell not meeting all three sides is empty
  auto side_of = [&](const VertexSet& s) { return s.subset_of(U) ? 0 : s.subset_of(V) ? 1 : s.subset_of(W) ? 2 : -1; };
  const auto& ps = r.output.parts();
  for (std::size_t a = 0; a < ps.size(); ++a)
    for (std::size_t b = a; b < ps.size(); ++b)
      for (std::size_t c = b; c < ps.size(); ++c) {
        int sa = side_of(ps[a]), sb = side_of(ps[b]), sc = side_of(ps[c]);
        bool crossing = sa >= 0 && sb >= 0 && sc >= 0 && sa != sb && sb != sc && sa != sc;
        if (sa < 0 || sb < 0 || sc < 0 || crossing) continue;
        if (core::count3(h, ps[a], ps[b], ps[c]) != 0)
          throw ContractError("exp_class_partition: non-crossing cell has positive density");
      }
  r.extra["hom_at_eps"] = check_contract(r.target, r.output, {"homogeneous", Threshold(eps)}) ? "true" : "false";
  finalize(r, {false, true});
  return r;
}

TechOutcome tech_triple_classify(const ThreeGraph& h, const std::array<VertexSet, 3>& sides,
                                 const std::array<VertexSet, 3>& d, const Rational& eps, bool verify_regular) {
  if (eps <= 0 || eps >= Rational(1, 3)) throw ContractError("tech_triple_classify: eps must lie in (0, 1/3)");
  std::size_t n = h.n();
  VertexSet all(n);
  for (auto& s : sides) {
    if (s.universe() != n || s.intersects(all)) throw DomainError("tech_triple_classify: sides must partition V");
    all |= s;
  }
  if (all != VertexSet::full(n)) throw DomainError("tech_triple_classify: sides must partition V");
  for (auto& e : h.edges()) {
    int mask = 0;
    for (int v : e)
      for (int s = 0; s < 3; ++s)
        if (sides[s].contains(v)) mask |= 1 << s;
    if (mask != 7) throw ContractError("tech_triple_classify: graph is not 3-partite for the given sides");
  }
  if (verify_regular && !regularity::check_triple_exact(h, d[0], d[1], d[2], Threshold(eps)).regular())
    throw ContractError("tech_triple_classify: triple is not eps-regular");
  TechOutcome out;
  out.density = core::density3(h, d[0], d[1], d[2]);
  out.sparse = out.density <= eps;
  std::array<int, 3> f{0, 1, 2};
  do {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      ok = ll(d[i].intersection_size(sides[f[i]])) >= (1 - 2 * eps) * ll(d[i].size());
    if (ok) {
      out.aligned = std::array<int, 3>{f[0] + 1, f[1] + 1, f[2] + 1};
      break;
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

}  // namespace reglab::transforms
