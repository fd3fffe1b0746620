#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>

#include "report.hpp"
#include "wsc/domains.hpp"

namespace wsc::cli {

namespace {

using report::json;
using report::Report;

struct Options {
  std::string format = "json";
  int threads = -1;
  int n = 0;
  int k = -1;
  std::string a, b, i, j;
  std::string method = "exact";
  std::size_t budget = 1'000'000;
  std::string relation = "weak";
  std::string split;
  std::string kind = "auto";
  std::string perm, colors, necklace, p;
  bool stream = false;
  bool large = false;
  bool with_domain = false;
};

struct Outcome {
  Report report;
  int code = kExitOk;
};

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, next - pos);
    int v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InvalidInput("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

Subset subset_arg(const std::string& text, int n, std::string_view flag) {
  try {
    return parse_subset(text, n);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(flag) + ": " + e.what());
  }
}

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long out = 1;
  for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

struct DomainChoice {
  std::string kind;
  Collection domain;
  std::optional<long long> expected_rank;
};

DomainChoice choose_domain(const Options& o, Relation relation) {
  std::string kind = o.kind;
  if (kind == "auto") kind = !o.i.empty() || !o.j.empty() ? "aij" : o.k >= 0 ? "grid" : "powerset";
  DomainChoice out{kind, {}, std::nullopt};
  const int n = o.n;
  if (kind == "aij") {
    if (o.i.empty() || o.j.empty()) throw InvalidInput("the aij domain needs --i and --j");
    const Subset i = subset_arg(o.i, n, "--i");
    const Subset j = subset_arg(o.j, n, "--j");
    out.domain = build_domain_AIJ(i, j);
    const PairContext ctx = reduce_pair(i, j);
    if (relation == Relation::weak && !ctx.degenerate() && ctx.balanced) out.expected_rank = rank_formula(ctx);
  } else if (kind == "grid" || kind == "boundary") {
    if (o.k < 0 || o.k > n) throw InvalidInput("--" + kind + " needs 0 <= --k <= --n");
    if (kind == "grid") {
      out.domain = Collection(k_subsets(n, o.k));
      out.expected_rank = static_cast<long long>(o.k) * (n - o.k) + 1;
    } else {
      out.domain = boundary_intervals(o.k, n);
      out.expected_rank = static_cast<long long>(out.domain.size());
    }
  } else if (kind == "powerset") {
    out.domain = Collection(all_subsets(n));
    out.expected_rank = relation == Relation::weak ? binomial(n, 2) + n + 1
                                                   : binomial(n, 0) + binomial(n, 1) + binomial(n, 2) + binomial(n, 3);
  } else if (kind == "lr") {
    out.domain = lr_domain(n);
    if (relation == Relation::weak) out.expected_rank = binomial(n, 2) + n + 1;
  } else {
    throw InvalidInput("unknown domain kind '" + kind + "' (expected aij, grid, boundary, powerset or lr)");
  }
  return out;
}

json sets_json(const Collection& c, bool lr) {
  json out = json::array();
  for (const Subset& s : c) out.push_back(lr ? report::lr_json(s) : report::to_json(s));
  return out;
}

Outcome do_check(const Options& o) {
  const Subset a = subset_arg(o.a, o.n, "--a");
  const Subset b = subset_arg(o.b, o.n, "--b");
  Outcome out;
  out.report.doc = {{"weakly_separated", is_weakly_separated(a, b)}, {"chord_separated", is_chord_separated(a, b)}};
  return out;
}

Outcome do_domain(const Options& o) {
  const DomainChoice d = choose_domain(o, parse_relation(o.relation));
  Outcome out;
  const json sets = sets_json(d.domain, d.kind == "lr");
  out.report.doc = {{"kind", d.kind}, {"n", o.n}, {"size", d.domain.size()}, {"sets", sets}};
  out.report.rows = sets;
  return out;
}

Outcome do_purity(const Options& o) {
  const Relation relation = parse_relation(o.relation);
  const DomainChoice d = choose_domain(o, relation);
  Outcome out;
  out.report.doc = report::to_json(purity_report(d.domain, relation, o.stream));
  out.report.doc["kind"] = d.kind;
  out.report.doc["relation"] = relation_name(relation);
  if (d.expected_rank) out.report.doc["expected_rank"] = *d.expected_rank;
  return out;
}

Outcome do_distance(const Options& o) {
  const Subset i = subset_arg(o.i, o.n, "--i");
  const Subset j = subset_arg(o.j, o.n, "--j");
  const DistanceMethod method = parse_distance_method(o.method);
  const ClusterDistance d = cluster_distance(i, j, method);
  Outcome out;
  out.report.doc = {{"d", d.value}};
  if (method == DistanceMethod::formula) out.report.doc["upper_bound"] = d.upper_bound;
  return out;
}

Outcome do_mutdist(const Options& o) {
  const Subset i = subset_arg(o.i, o.n, "--i");
  const Subset j = subset_arg(o.j, o.n, "--j");
  const DistanceResult r = mutation_distance(i, j, {.budget = o.budget, .allow_large = o.large});
  Outcome out;
  json path = json::array();
  for (const SquareMove& m : r.path) path.push_back(report::to_json(m));
  out.report.doc = {{"distance", r.distance ? json(*r.distance) : json(nullptr)},
                    {"nodes_explored", r.nodes_explored},
                    {"path", path},
                    {"source", report::to_json(r.source)},
                    {"target", report::to_json(r.target)}};
  if (r.budget_exhausted()) {
    out.report.doc["upper_bound"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
    out.code = kExitBudget;
  }
  out.report.rows = path;
  return out;
}

Outcome do_necklace(const Options& o) {
  const int given = (!o.perm.empty() ? 1 : 0) + (!o.a.empty() ? 1 : 0) + (!o.necklace.empty() ? 1 : 0);
  if (given != 1) throw InvalidInput("necklace needs exactly one of --perm, --a, --necklace");
  Outcome out;
  json& doc = out.report.doc;
  DecoratedPermutation perm;
  if (!o.a.empty()) {
    const CanonicalPermutation c = canonical_permutation(subset_arg(o.a, o.n, "--a"));
    perm = c.composed;
    doc["block_reversal"] = c.block_reversal.one_line();
    doc["p"] = c.partition.lengths;
    doc["offset"] = c.partition.offset;
  } else if (!o.perm.empty()) {
    std::map<int, int> colors;
    if (!o.colors.empty()) {
      std::size_t pos = 0;
      while (pos <= o.colors.size()) {
        const std::size_t next = std::min(o.colors.find(',', pos), o.colors.size());
        const std::string item = o.colors.substr(pos, next - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw InvalidInput("--colors entries look like 3:-1");
        colors[parse_ints(item.substr(0, colon), "--colors")[0]] = parse_ints(item.substr(colon + 1), "--colors")[0];
        pos = next + 1;
      }
    }
    perm = DecoratedPermutation(parse_ints(o.perm, "--perm"), colors);
  } else {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= o.necklace.size()) {
      const std::size_t next = std::min(o.necklace.find(';', pos), o.necklace.size());
      parts.push_back(o.necklace.substr(pos, next - pos));
      pos = next + 1;
    }
    std::vector<Subset> sets;
    for (const std::string& part : parts) sets.push_back(subset_arg(part, static_cast<int>(parts.size()), "--necklace"));
    perm = perm_from_necklace(GrassmannNecklace(sets));
  }
  if (o.n != 0 && o.n != perm.n()) throw InvalidInput("--n does not match the permutation size");

  int k = o.k;
  if (k < 0) {
    k = 0;
    for (int x = 1; x <= perm.n(); ++x) {
      if (x < perm.inverse(x) || (perm.is_fixed(x) && perm.colors().at(x) == -1)) ++k;
    }
  }
  const GrassmannNecklace nk = necklace_from_perm(perm, k);
  const PermutationLength len = length_of(perm, k);
  const json perm_json = report::to_json(perm);
  doc["perm"] = perm_json["perm"];
  doc["colors"] = perm_json["colors"];
  doc["n"] = perm.n();
  doc["k"] = k;
  doc["necklace"] = report::to_json(nk);
  doc["connected"] = nk.connected();
  doc["alignments"] = len.alignments;
  doc["length"] = len.length;
  if (o.with_domain) {
    const Collection d = domain_in_for_necklace(nk);
    doc["domain_in"] = report::to_json(purity_report(d, Relation::weak, o.stream));
    doc["expected_rank"] = len.length + 1;
  }
  out.report.rows = doc["necklace"];
  return out;
}

Outcome do_lr(const Options& o) {
  const Collection d = lr_domain(o.n);
  const CompatGraph g = build_compat_graph(d, Relation::weak);
  Outcome out;
  out.report.doc = report::to_json(purity_report(g));
  int chains = 0;
  for (const Collection& w : enumerate_maximal_cliques(g)) {
    lr_chain(w, o.n);
    ++chains;
  }
  out.report.doc["n"] = o.n;
  out.report.doc["expected_rank"] = binomial(o.n, 2) + o.n + 1;
  out.report.doc["chains_checked"] = chains;
  return out;
}

Outcome do_chord(const Options& o) {
  const CompatGraph g = build_compat_graph(Collection(all_subsets(o.n)), Relation::chord);
  Outcome out;
  out.report.doc = report::to_json(purity_report(g));
  long long chains = 0;
  for (const Collection& w : enumerate_maximal_cliques(g)) chains += check_chord_chains(w);
  out.report.doc["n"] = o.n;
  out.report.doc["expected_rank"] = binomial(o.n, 0) + binomial(o.n, 1) + binomial(o.n, 2) + binomial(o.n, 3);
  out.report.doc["chains_checked"] = chains;
  return out;
}

Outcome do_octahedron(const Options& o) {
  if (o.a.empty() == o.p.empty()) throw InvalidInput("octahedron needs exactly one of --a, --p");
  Subset a;
  if (!o.p.empty()) {
    const std::vector<int> p = parse_ints(o.p, "--p");
    if (p.size() != 4) throw InvalidInput("--p needs four block lengths");
    int n = 0;
    for (int len : p) {
      if (len < 1) throw InvalidInput("--p block lengths must be positive");
      n += len;
    }
    std::vector<int> e;
    for (int x = 1; x <= p[0]; ++x) e.push_back(x);
    for (int x = p[0] + p[1] + 1; x <= p[0] + p[1] + p[2]; ++x) e.push_back(x);
    a = Subset::of(e, n);
  } else {
    a = subset_arg(o.a, o.n, "--a");
  }
  Outcome out;
  out.report.doc = report::to_json(p4_counts(a));
  if (!o.split.empty()) {
    const std::vector<int> s = parse_ints(o.split, "--split");
    if (s.size() != 4) throw InvalidInput("--split needs four lengths");
    const Split4 split{s[0], s[1], s[2], s[3]};
    out.report.doc["phi"] = report::to_json(phi(a, split));
    out.report.doc["phi_complement"] = report::to_json(phi(complement(a), split));
  }
  return out;
}

Outcome do_explore(const Options& o, bool keep_nodes) {
  if (o.k < 0 || o.k > o.n) throw InvalidInput("explore needs 0 <= --k <= --n");
  const Collection grid(k_subsets(o.n, o.k));
  const Collection seed = complete_to_maximal(Collection::empty(o.n), grid);
  const MutationGraphSummary g = explore_mutation_graph(seed, {.budget = o.budget, .domain = std::nullopt, .keep_nodes = keep_nodes});
  Outcome out;
  out.report.doc = {{"n", o.n}, {"k", o.k}, {"nodes", g.node_count}, {"edges", g.edge_count}, {"complete", g.complete}};
  if (keep_nodes) {
    json rows = json::array();
    for (const Collection& c : g.nodes) rows.push_back(report::to_json(c));
    out.report.rows = rows;
  }
  if (!g.complete) out.code = kExitBudget;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weakly separated collections: purity, distances, necklaces and mutations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (overrides THREADS; 1 = serial)");
  app.add_option("--format", o.format, "json, jsonl or csv")->capture_default_str();

  auto ground = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Ground set size")->required(); };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--i", o.i, "First set, e.g. 1,2,4");
    sub->add_option("--j", o.j, "Second set");
  };
  auto domain_flags = [&](CLI::App* sub) {
    ground(sub);
    pair(sub);
    sub->add_option("--k", o.k, "Set size for grid and boundary domains");
    sub->add_option("--kind", o.kind, "auto, aij, grid, boundary, powerset or lr")->capture_default_str();
    sub->add_option("--relation", o.relation, "weak or chord")->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "Weak and chord separation of two sets");
  ground(check);
  check->add_option("--a", o.a, "First set")->required();
  check->add_option("--b", o.b, "Second set")->required();

  CLI::App* domain = app.add_subcommand("domain", "List a domain");
  domain_flags(domain);

  CLI::App* purity = app.add_subcommand("purity", "Maximal-clique sizes of a domain");
  domain_flags(purity);
  purity->add_flag("--stream", o.stream, "Do not report the clique count");

  CLI::App* distance = app.add_subcommand("distance", "Cluster distance d(I, J)");
  ground(distance);
  pair(distance);
  distance->add_option("--method", o.method, "exact or formula")->capture_default_str();

  CLI::App* mutdist = app.add_subcommand("mutdist", "Mutation distance D(I, J)");
  ground(mutdist);
  pair(mutdist);
  mutdist->add_option("--budget", o.budget, "Node budget")->capture_default_str();
  mutdist->add_flag("--large", o.large, "Allow k(n-k) above 12");

  CLI::App* necklace = app.add_subcommand("necklace", "Necklace of a decorated permutation");
  necklace->add_option("--n", o.n, "Ground set size (required with --a)");
  necklace->add_option("--k", o.k, "Necklace set size (inferred when omitted)");
  necklace->add_option("--perm", o.perm, "One-line permutation, e.g. 4,8,7,10,9,3,2,1,6,5");
  necklace->add_option("--colors", o.colors, "Fixed-point colours, e.g. 3:-1,5:1");
  necklace->add_option("--a", o.a, "Use the canonical permutation of this set over [n]");
  necklace->add_option("--necklace", o.necklace, "Sets separated by ';'");
  necklace->add_flag("--domain", o.with_domain, "Also report purity of the necklace domain");
  necklace->add_flag("--stream", o.stream, "Do not report the clique count");

  CLI::App* lr = app.add_subcommand("lr", "Purity and chains of the LR domain on [0, n]");
  ground(lr);

  CLI::App* chord = app.add_subcommand("chord", "Chord-separated purity and chains in 2^[n]");
  ground(chord);

  CLI::App* octa = app.add_subcommand("octahedron", "Lattice counts for a four-block set");
  octa->add_option("--n", o.n, "Ground set size (with --a)");
  octa->add_option("--a", o.a, "Set over [2k]");
  octa->add_option("--p", o.p, "Block lengths, e.g. 2,1,1,2");
  octa->add_option("--split", o.split, "Also project A and its complement, e.g. 2,1,1,2");

  CLI::App* explore = app.add_subcommand("explore", "Mutation graph of [n] choose k");
  ground(explore);
  explore->add_option("--k", o.k, "Set size")->required();
  explore->add_option("--budget", o.budget, "Node budget")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    const report::Format format = report::parse_format(o.format);
    int threads = o.threads;
    if (threads < 0) {
      if (const char* env = std::getenv("THREADS"); env != nullptr && *env != '\0') {
        threads = parse_ints(env, "THREADS")[0];
      }
    }
    if (threads >= 0) set_thread_count(threads);

    Outcome result;
    if (check->parsed()) result = do_check(o);
    else if (domain->parsed()) result = do_domain(o);
    else if (purity->parsed()) result = do_purity(o);
    else if (distance->parsed()) result = do_distance(o);
    else if (mutdist->parsed()) result = do_mutdist(o);
    else if (necklace->parsed()) result = do_necklace(o);
    else if (lr->parsed()) result = do_lr(o);
    else if (chord->parsed()) result = do_chord(o);
    else if (octa->parsed()) result = do_octahedron(o);
    else result = do_explore(o, format != report::Format::json);
    out << report::emit(result.report, format);
    if (result.code == kExitBudget) err << "budget exhausted\n";
    return result.code;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ContractViolation& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const TheoremViolation& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace wsc::cli
