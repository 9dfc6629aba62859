#include "reglab/cli.hpp"

#include "reglab/dimensions.hpp"
#include "reglab/errors.hpp"
#include "reglab/extraction.hpp"
#include "reglab/io.hpp"
#include "reglab/reduction.hpp"
#include "reglab/search.hpp"
#include "reglab/transforms.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace reglab::cli {

namespace {

using io::json;
namespace rg = regularity;

struct Config {
  unsigned exact_budget = 22;
  std::size_t n_cap = 12;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  int trials = 64;
};

struct Args {
  std::string graph, partition, out, family, x, y, z, u, v, kind, mode, eps = "", scales = "1,2,3", which = "g";
  std::string s1, s2;
  int k = 2, n = 1, size = 2, small = 1, kmax = dimensions::kVcGuard, i = 1, budget = 100000;
  bool no_timing = false;
};

Rational parse_eps(const std::string& s) {
  if (s.empty()) throw DomainError("--eps is required");
  Rational e = Rational::parse(s);
  if (e <= 0) throw DomainError("--eps must be positive, got " + e.str());
  return e;
}

void emit(std::ostream& out, const Args& a, json j) {
  j["schema"] = io::kSchema;
  std::string text = j.dump(2) + "\n";
  if (a.out.empty()) out << text;
  else io::write_file(a.out, text);
}

const Graph& need_graph(const families::Instance& inst, const std::string& cmd) {
  if (inst.graph.index() != 0) throw DomainError(cmd + ": expects a graph, got a 3-graph");
  return inst.g();
}
const ThreeGraph& need_three(const families::Instance& inst, const std::string& cmd) {
  if (inst.graph.index() != 1) throw DomainError(cmd + ": expects a 3-graph, got a graph");
  return inst.h();
}

json cert_json(const std::optional<dimensions::ShatterCertificate>& c) {
  if (!c) return nullptr;
  json j = {{"k", c->k}, {"a", c->a}, {"b", c->b}};
  if (!c->c.empty()) j["c"] = c->c;
  return j;
}

json report_json(const transforms::TransferReport& r) {
  json parts = io::to_json(r.output)["parts"];
  json j = {{"transfer", r.transfer},
            {"branch", r.branch},
            {"input_contract", {{"kind", r.input_contract.kind}, {"threshold", r.input_contract.threshold.str()}}},
            {"output_contract", {{"kind", r.output_contract.kind}, {"threshold", r.output_contract.threshold.str()}}},
            {"input_checked", r.input_checked},
            {"input_ok", r.input_ok},
            {"output_checked", r.output_checked},
            {"verified", r.verified},
            {"claimed_bound", r.claimed_bound},
            {"actual_parts", r.actual_parts},
            {"output", parts},
            {"target", io::to_json(r.target)}};
  if (r.output_verdict) j["output_verdict"] = io::to_json(*r.output_verdict);
  j["extra"] = r.extra;
  return j;
}

json copy_json(const std::optional<extraction::UvCopy>& c) {
  if (!c) return nullptr;
  return {{"pattern", families::to_string(c->pattern)}, {"a", c->a}, {"b", c->b}};
}

search::Kind parse_kind(const std::string& s) {
  if (s.empty() || s == "regular") return search::Kind::regular;
  if (s == "hom") return search::Kind::homogeneous;
  throw DomainError("--kind must be regular or hom, got '" + s + "'");
}

std::vector<Rational> parse_eps_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_eps(tok));
  if (out.empty()) throw DomainError("--eps list is empty");
  return out;
}

families::Instance generate(const Args& a) {
  const std::string& f = a.family;
  if (f == "u") return families::gen_powerset_graph(a.k);
  if (f == "h") return families::gen_halfgraph(a.k);
  if (f == "m") return families::gen_matching(a.k);
  if (f == "mbar") return families::gen_comatching(a.k);
  if (f == "uhat") return families::uhat(a.k);
  if (f == "hkn") return families::gen_hkn(a.k, a.n);
  if (f == "ukblowup-lb") {
    auto r = families::gen_uk_blowup_lb(a.k, a.n, a.small);
    if (a.which == "gamma") return r.gamma;
    if (a.which == "g") return r.g;
    throw DomainError("--which must be g or gamma");
  }
  if (a.graph.empty()) throw DomainError("gen --family " + f + ": --graph is required");
  auto base = io::load_instance(a.graph);
  if (f == "bip") return families::bip_double(need_graph(base, "gen bip"));
  if (f == "trip") return families::trip_triple(need_three(base, "gen trip"));
  if (f == "otimes") return families::otimes(a.n, base);
  if (f == "ghat") return families::ghat(base);
  if (f == "blowup") return families::blowup(base, a.size);
  throw DomainError("gen: unknown family '" + f + "'");
}

int dispatch(const std::string& cmd, const Args& a, const Config& cfg, std::ostream& out) {
  rg::ExactOptions ex;
  ex.max_enum_bits = cfg.exact_budget;
  search::SearchOptions so;
  so.n_cap = cfg.n_cap;
  so.threads = cfg.threads;

  if (cmd == "gen") {
    emit(out, a, io::to_json(generate(a)));
    return 0;
  }
  if (cmd == "tower") {
    search::TowerValue t;
    if (a.kind.empty() || a.kind == "tw") t = search::tower(a.i);
    else if (a.kind == "f") t = search::chung_f(a.i);
    else if (a.kind == "twf-literal") t = search::tower_f(a.i, true);
    else if (a.kind == "twf-iterated") t = search::tower_f(a.i, false);
    else throw DomainError("--kind must be tw, f, twf-literal or twf-iterated");
    json j = {{"kind", t.kind}, {"arg", t.arg}, {"overflow", t.overflow}, {"value", t.str()}};
    j["exponent"] = t.exponent ? json(t.exponent->str()) : json(nullptr);
    emit(out, a, j);
    return 0;
  }
  if (cmd == "sweep") {
    if (a.family.empty()) throw DomainError("sweep: --family is required");
    std::vector<int> scales = io::parse_int_list(a.scales, "--scales");
    auto r = search::growth_sweep(a.family, scales, parse_eps_list(a.eps), parse_kind(a.kind), so);
    if (a.mode == "json") {
      json recs = json::array();
      for (auto& x : r.records)
        recs.push_back({{"family", x.family},
                        {"params", x.params},
                        {"eps", x.eps.str()},
                        {"vertices", x.vertices},
                        {"size_lower", x.size_lower},
                        {"size_upper", x.size_upper},
                        {"method", x.method},
                        {"certified", x.certified},
                        {"seconds", a.no_timing ? 0.0 : x.seconds}});
      emit(out, a, {{"records", recs}, {"classification", r.classification}, {"disclaimer", r.disclaimer}});
    } else {
      std::string csv = search::sweep_csv(r, !a.no_timing);
      if (a.out.empty()) out << csv;
      else io::write_file(a.out, csv);
      out << "# " << r.disclaimer << "\n";
    }
    return 0;
  }
  if (cmd == "lb-experiment") {
    Rational eps = parse_eps(a.eps);
    if (a.kind == "ukblowup") {
      auto r = search::ukblowup_lb_verify(a.k, a.n, a.small, eps, cfg.n_cap);
      json j = {{"K", r.K},           {"n", r.n},          {"small_side", r.small_side},
                {"eps", r.eps.str()}, {"vertices", r.vertices}, {"size_lower", r.size_lower},
                {"method", r.method}, {"certified", r.certified}, {"disclaimer", r.disclaimer}};
      j["size"] = r.size ? json(*r.size) : json(nullptr);
      emit(out, a, j);
      return 0;
    }
    if (!a.kind.empty() && a.kind != "blowup") throw DomainError("--kind must be blowup or ukblowup");
    auto r = search::lb_blowup_experiment(Rational::parse(a.s1), Rational::parse(a.s2), eps, a.n, so);
    json j = {{"s1", r.s1.str()},  {"s2", r.s2.str()},     {"eps", r.eps.str()},
              {"n", r.n},          {"m", r.m},             {"degenerate", r.degenerate},
              {"vertices", r.vertices}, {"bound", r.bound.str()}, {"method", r.method},
              {"certified", r.certified}, {"disclaimer", r.disclaimer}};
    j["size"] = r.size ? json(*r.size) : json(nullptr);
    j["bound_met"] = r.bound_met ? json(*r.bound_met) : json(nullptr);
    emit(out, a, j);
    return 0;
  }

  if (a.graph.empty()) throw DomainError(cmd + ": --graph is required");
  auto inst = io::load_instance(a.graph);

  if (cmd == "check-pair" || cmd == "check-triple") {
    Rational eps = parse_eps(a.eps);
    std::vector<VertexSet> cell{io::resolve_selector(inst, a.x), io::resolve_selector(inst, a.y)};
    if (cmd == "check-pair") need_graph(inst, cmd);
    else {
      need_three(inst, cmd);
      cell.push_back(io::resolve_selector(inst, a.z));
    }
    rg::Verdict v;
    if (a.mode.empty() || a.mode == "exact") v = rg::check_cell_exact(inst.graph, cell, eps, ex);
    else if (a.mode == "heuristic") v = rg::witness_search_heuristic(inst.graph, cell, eps, cfg.trials, cfg.seed);
    else throw DomainError("--mode must be exact or heuristic");
    json j = io::to_json(v);
    j["eps"] = eps.str();
    emit(out, a, j);
    return 0;
  }
  if (cmd == "check-partition") {
    Rational eps = parse_eps(a.eps);
    if (a.partition.empty()) throw DomainError("check-partition: --partition is required");
    Partition p = io::load_partition(a.partition, inst.n());
    rg::PartitionOptions po;
    po.exact = ex;
    po.seed = cfg.seed;
    po.heuristic_trials = cfg.trials;
    po.kind = parse_kind(a.kind) == search::Kind::regular ? rg::CellKind::regular : rg::CellKind::homogeneous;
    if (a.mode == "heuristic") po.mode = rg::Mode::heuristic;
    else if (!a.mode.empty() && a.mode != "exact") throw DomainError("--mode must be exact or heuristic");
    json j = io::to_json(rg::check_partition(inst.graph, p, eps, po));
    j["eps"] = eps.str();
    emit(out, a, j);
    return 0;
  }
  if (cmd == "vc") {
    dimensions::VcResult r = inst.graph.index() == 0 ? dimensions::vc_graph(inst.g(), a.kmax)
                                                     : dimensions::vc_threegraph(inst.h(), a.kmax);
    emit(out, a, {{"value", r.value}, {"at_least", r.at_least}, {"certificate", cert_json(r.certificate)}});
    return 0;
  }
  if (cmd == "svc") {
    auto r = dimensions::svc(need_three(inst, cmd), a.kmax);
    emit(out, a,
         {{"value", r.value},
          {"at_least", r.at_least},
          {"slice_vertex", r.slice_vertex},
          {"certificate", cert_json(r.certificate)}});
    return 0;
  }
  if (cmd == "classes") {
    auto tc = reduction::twin_classes(inst.graph);
    json kinds = json::array();
    for (auto k : tc.kinds) kinds.push_back(reduction::to_string(k));
    emit(out, a, {{"parts", io::to_json(tc.partition)["parts"]}, {"kinds", kinds}, {"irreducible", tc.irreducible}});
    return 0;
  }
  if (cmd == "reduce") {
    auto r = reduction::reduce(inst.graph);
    json j = io::to_json(r.graph);
    j["to_parent"] = r.to_parent;
    emit(out, a, j);
    return 0;
  }
  if (cmd == "transfer") {
    Rational eps = parse_eps(a.eps);
    transforms::TransferReport r;
    if (a.kind == "exp-class") {
      r = transforms::exp_class_partition(inst, eps);
    } else {
      if (a.partition.empty()) throw DomainError("transfer: --partition is required");
      Partition p = io::load_partition(a.partition, inst.n());
      if (a.kind == "bip") r = transforms::bip_transfer(need_graph(inst, "transfer bip"), p, eps);
      else if (a.kind == "trip") r = transforms::trip_transfer(need_three(inst, "transfer trip"), p, eps);
      else if (a.kind == "otimes") {
        // the partition lives on n⊗g; --graph is the bipartite g
        auto big = families::otimes(static_cast<int>(std::max(inst.at("U").size(), inst.at("V").size())), inst);
        r = transforms::otimes_project(inst, io::load_partition(a.partition, big.n()), eps);
      } else if (a.kind == "blowup-hom") r = transforms::blowup_hom_project(inst, p, eps);
      else throw DomainError("--kind must be bip, trip, otimes, blowup-hom or exp-class");
    }
    emit(out, a, report_json(r));
    return r.verified ? 0 : 2;
  }
  if (cmd == "extract") {
    const Graph& g = need_graph(inst, cmd);
    VertexSet u = io::resolve_selector(inst, a.u.empty() ? "U" : a.u);
    VertexSet v = io::resolve_selector(inst, a.v.empty() ? "V" : a.v);
    if (a.mode.empty() || a.mode == "brute") {
      emit(out, a, {{"mode", "brute"}, {"k", a.k}, {"copy", copy_json(extraction::find_uv_copy_bruteforce(g, u, v, a.k))}});
      return 0;
    }
    if (a.mode != "iterative") throw DomainError("--mode must be brute or iterative");
    auto r = extraction::extract_uv_copy_iterative(g, u, v, a.k, a.budget);
    emit(out, a,
         {{"mode", "iterative"},
          {"k", a.k},
          {"copy", copy_json(r.copy)},
          {"phase1_steps", r.phase1_steps},
          {"kept_after_first_filter", r.kept_after_first_filter},
          {"pivots", r.pivots},
          {"final_length", r.final_length},
          {"orientation", r.orientation}});
    return 0;
  }
  if (cmd == "minpart") {
    auto r = search::min_partition_exhaustive(inst.graph, parse_eps(a.eps), parse_kind(a.kind), so);
    emit(out, a,
         {{"size", r.size},
          {"partition", io::to_json(r.partition)["parts"]},
          {"minimal_proven", r.minimal_proven},
          {"examined", r.examined},
          {"method", "exhaustive"}});
    return 0;
  }
  throw DomainError("unknown subcommand " + cmd);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"reglab: regularity experiments on small graphs and 3-graphs"};
  app.require_subcommand(1);
  Config cfg;
  Args a;
  app.add_option("--exact-budget", cfg.exact_budget, "max vertices enumerated by exact checks")
      ->check(CLI::Range(1u, 40u));
  app.add_option("--ncap", cfg.n_cap, "vertex cap for exhaustive partition search")->check(CLI::Range(1, 16));
  app.add_option("--seed", cfg.seed, "seed for heuristic witness search");
  app.add_option("--threads", cfg.threads, "worker threads (default REGLAB_THREADS or 1)");
  app.add_option("--trials", cfg.trials, "heuristic trials")->check(CLI::PositiveNumber);

  auto graph = [&](CLI::App* s) { s->add_option("--graph", a.graph, "graph or instance JSON"); };
  auto outopt = [&](CLI::App* s) { s->add_option("--out,-o", a.out, "output file (default stdout)"); };
  auto epsopt = [&](CLI::App* s) { s->add_option("--eps", a.eps, "exact fraction p/q"); };
  auto ncap = [&](CLI::App* s) { s->add_option("--ncap", cfg.n_cap, "vertex cap")->check(CLI::Range(1, 16)); };

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", a.family, "u|h|m|mbar|uhat|hkn|ukblowup-lb|bip|trip|otimes|ghat|blowup")->required();
  gen->add_option("--k", a.k);
  gen->add_option("--n", a.n);
  gen->add_option("--size", a.size, "blow-up class size");
  gen->add_option("--small", a.small, "ukblowup-lb shrunk side");
  gen->add_option("--which", a.which, "ukblowup-lb: g or gamma");
  graph(gen);
  outopt(gen);

  for (const char* name : {"check-pair", "check-triple"}) {
    auto* s = app.add_subcommand(name, "exact or heuristic regularity of one cell");
    graph(s);
    epsopt(s);
    s->add_option("--x", a.x, "label or vertex list")->required();
    s->add_option("--y", a.y, "label or vertex list")->required();
    if (std::string(name) == "check-triple") s->add_option("--z", a.z, "label or vertex list")->required();
    s->add_option("--mode", a.mode, "exact|heuristic");
    s->add_option("--seed", cfg.seed);
    outopt(s);
  }
  auto* cp = app.add_subcommand("check-partition", "regular or homogeneous partition check");
  graph(cp);
  epsopt(cp);
  cp->add_option("--partition", a.partition, "partition JSON");
  cp->add_option("--kind", a.kind, "regular|hom");
  cp->add_option("--mode", a.mode, "exact|heuristic");
  outopt(cp);

  for (const char* name : {"vc", "svc"}) {
    auto* s = app.add_subcommand(name, std::string(name) == "vc" ? "VC dimension" : "slicewise VC dimension");
    graph(s);
    s->add_option("--kmax", a.kmax)->check(CLI::Range(1, dimensions::kVcGuard));
    outopt(s);
  }
  for (const char* name : {"classes", "reduce"}) {
    auto* s = app.add_subcommand(name, std::string(name) == "classes" ? "twin classes" : "twin reduction");
    graph(s);
    outopt(s);
  }
  auto* tr = app.add_subcommand("transfer", "partition transfers with re-verification");
  graph(tr);
  epsopt(tr);
  tr->add_option("--kind", a.kind, "bip|trip|otimes|blowup-hom|exp-class")->required();
  tr->add_option("--partition", a.partition);
  outopt(tr);

  auto* ext = app.add_subcommand("extract", "UV-copies of H(k), M(k), co-M(k)");
  graph(ext);
  ext->add_option("--u", a.u, "label or vertex list (default U)");
  ext->add_option("--v", a.v, "label or vertex list (default V)");
  ext->add_option("--k", a.k);
  ext->add_option("--mode", a.mode, "brute|iterative");
  ext->add_option("--budget", a.budget);
  outopt(ext);

  auto* mp = app.add_subcommand("minpart", "exhaustive minimal partition");
  graph(mp);
  epsopt(mp);
  mp->add_option("--kind", a.kind, "regular|hom");
  ncap(mp);
  outopt(mp);

  auto* sw = app.add_subcommand("sweep", "growth sweep over a family");
  sw->add_option("--family", a.family)->required();
  sw->add_option("--scales", a.scales, "comma list");
  epsopt(sw);
  sw->add_option("--kind", a.kind, "regular|hom");
  sw->add_option("--format", a.mode, "csv|json");
  sw->add_flag("--no-timing", a.no_timing, "write 0 in the seconds column");
  ncap(sw);
  outopt(sw);

  auto* lb = app.add_subcommand("lb-experiment", "lower-bound experiment drivers");
  lb->add_option("--kind", a.kind, "blowup|ukblowup");
  lb->add_option("--s1", a.s1);
  lb->add_option("--s2", a.s2);
  epsopt(lb);
  lb->add_option("--n", a.n);
  lb->add_option("--K", a.k);
  lb->add_option("--small", a.small);
  ncap(lb);
  outopt(lb);

  auto* tw = app.add_subcommand("tower", "Tw, f, Tw_f");
  tw->add_option("--i", a.i)->required();
  tw->add_option("--kind", a.kind, "tw|f|twf-literal|twf-iterated");
  outopt(tw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, a, cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    err << "contract: " << e.what() << "\n";
    return 2;
  } catch (const SearchExhausted& e) {
    err << "exhausted: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace reglab::cli
