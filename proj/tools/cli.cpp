#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "statseq/families.hpp"
#include "statseq/graph.hpp"
#include "statseq/hardness.hpp"
#include "statseq/io.hpp"
#include "statseq/oracle.hpp"
#include "statseq/partitions.hpp"
#include "statseq/realize_injective.hpp"
#include "statseq/srt_d3.hpp"

namespace statseq::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabeledGraph load_graph(const std::string& path) { return read_edge_list(slurp(path)); }

std::vector<std::int64_t> load_values(const std::string& path) {
  return read_sequence(slurp(path));
}

json edges_to_json(const std::vector<Edge>& edges, const std::vector<std::int64_t>& labels) {
  json arr = json::array();
  for (auto [u, v] : edges) arr.push_back({labels[u], labels[v]});
  return arr;
}

std::vector<std::int64_t> dense_labels(int n) {
  std::vector<std::int64_t> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return labels;
}

void print_edges(std::ostream& out, const std::vector<Edge>& edges,
                 const std::vector<std::int64_t>& labels) {
  out << format_edge_list(edges, labels);
}

void print_parts(std::ostream& out, const Partition& p,
                 const std::vector<std::int64_t>& labels) {
  for (const auto& part : p.parts()) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << labels[part[i]];
    out << '\n';
  }
}

json parts_to_json(const Partition& p, const std::vector<std::int64_t>& labels) {
  json arr = json::array();
  for (const auto& part : p.parts()) {
    json one = json::array();
    for (Vertex v : part) one.push_back(labels[v]);
    arr.push_back(one);
  }
  return arr;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Tree random_tree(int n, std::mt19937& rng) {
  if (n <= 2) return n == 1 ? Tree(1, {}) : Tree(2, {{0, 1}});
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng() % n);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return Tree(n, edges);
}

// ---- check suites ----------------------------------------------------------

struct CheckResult {
  bool pass = true;
  std::string summary;
};

CheckResult check_k_bound_sweep(int max_n, std::ostream& out) {
  long trees = 0, violations = 0, untight_extremal = 0;
  for (int n = 1; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++trees;
      auto r = check_k_bound(t);
      if (r.k < r.lower_bound) ++violations;
      return true;
    });
    if (n >= 2 && !check_k_bound(generate(FamilySpec::path(n))).tight) ++untight_extremal;
    if (n >= 2 && !check_k_bound(generate(FamilySpec::star(n - 1))).tight) ++untight_extremal;
  }
  out << "# trees checked: " << trees << "\n";
  CheckResult r;
  r.pass = violations == 0 && untight_extremal == 0;
  r.summary = "all " + std::to_string(trees) + " trees with n <= " + std::to_string(max_n) +
              " satisfy k >= ceil((diam+1)/2); paths and stars attain it";
  return r;
}

CheckResult check_k_char(int max_n, bool level3, std::ostream& out) {
  long trees = 0, mismatches = 0;
  for (int n = 1; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      ++trees;
      int k = distinct_status_count(t.graph());
      bool structural = level3 ? classify_k3(t) : classify_k2(t);
      if (structural != (k == (level3 ? 3 : 2))) ++mismatches;
      return true;
    });
  }
  out << "# trees checked: " << trees << "\n";
  CheckResult r;
  r.pass = mismatches == 0;
  r.summary = "k = " + std::string(level3 ? "3" : "2") + " <=> structural class, over " +
              std::to_string(trees) + " trees with n <= " + std::to_string(max_n);
  return r;
}

CheckResult check_injective_unique(int max_n, unsigned seed, std::ostream& out) {
  static const long known_counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  std::mt19937 rng(seed);
  long injective = 0;
  bool ok = true;
  for (int n = 1; n <= max_n; ++n) {
    std::map<StatusSequence, std::vector<CanonicalForm>> by_sequence;
    long count = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      ++count;
      by_sequence[status_sequence(t.graph())].push_back(canonical_form(t));
      return true;
    });
    if (n <= 10 && count != known_counts[n]) {
      out << "# enumeration count mismatch at n = " << n << "\n";
      ok = false;
    }
    for (auto& [seq, forms] : by_sequence) {
      bool is_injective = std::adjacent_find(seq.begin(), seq.end()) == seq.end();
      if (forms.size() > 1 && is_injective) {
        ok = false;  // two non-isomorphic trees share an injective sequence
        out << "# shared injective sequence at n = " << n << "\n";
      }
      if (!is_injective) continue;
      ++injective;
      auto r = realize_injective(InjectiveSequence::from_values(seq));
      if (!r || canonical_form(r->tree) != forms.front()) {
        ok = false;
        out << "# realization failed at n = " << n << "\n";
      }
    }
  }
  // the realizer is label-independent: feed it relabeled sequences
  for (int iter = 0; iter < 10; ++iter) {
    Tree t = random_tree(7 + static_cast<int>(rng() % 4), rng);
    auto seq = status_sequence(t.graph());
    if (std::adjacent_find(seq.begin(), seq.end()) != seq.end()) continue;
    auto r = realize_injective(InjectiveSequence::from_values(seq));
    if (!r || canonical_form(r->tree) != canonical_form(t)) ok = false;
  }
  out << "# status-injective trees recovered: " << injective << "\n";
  CheckResult r;
  r.pass = ok;
  r.summary = "every status-injective tree with n <= " + std::to_string(max_n) +
              " is recovered up to isomorphism and no injective sequence is shared";
  return r;
}

CheckResult check_orbit_refines_status(int max_n, std::ostream& out) {
  long graphs = 0;
  bool ok = true;
  auto check_one = [&](const Graph& g, int cap) {
    ++graphs;
    auto orbits = orbit_partition(g, cap);
    if (!refines(orbits.orbits, status_partition(g))) ok = false;
    if (distinct_status_count(g) == g.order() && orbits.orbits.size() != g.order()) ok = false;
  };
  for (int n = 1; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      check_one(t.graph(), 16);
      return true;
    });
  }
  check_one(cycle_graph(5), 16);
  check_one(cycle_graph(6), 16);
  check_one(complete_graph(4), 16);
  check_one(generate_gm(3), 20);
  out << "# graphs checked: " << graphs << "\n";
  CheckResult r;
  r.pass = ok;
  r.summary = "orbit partitions refine status partitions on " + std::to_string(graphs) +
              " graphs (trees n <= " + std::to_string(max_n) + " plus fixed corpus)";
  return r;
}

CheckResult check_edge_split(int max_n, unsigned seed, int trials, std::ostream& out) {
  long edges_checked = 0;
  bool ok = true;
  auto check_tree = [&](const Tree& t) {
    auto s = tree_statuses(t);
    for (auto [u, v] : t.edges()) {
      ++edges_checked;
      auto [su, sv] = edge_split(t, u, v);
      if (s[u] - s[v] != static_cast<Status>(sv) - su) ok = false;
    }
  };
  for (int n = 2; n <= max_n; ++n)
    for_each_free_tree(n, [&](const Tree& t) {
      check_tree(t);
      return true;
    });
  std::mt19937 rng(seed);
  for (int iter = 0; iter < trials; ++iter) check_tree(random_tree(40, rng));
  out << "# edges checked: " << edges_checked << "\n";
  CheckResult r;
  r.pass = ok;
  r.summary = "s(v1) - s(v2) = |T2| - |T1| on " + std::to_string(edges_checked) + " edges";
  return r;
}

CheckResult check_median_monotone(int max_n, unsigned seed, int trials, std::ostream& out) {
  long trees = 0;
  bool ok = true;
  for (int n = 1; n <= max_n; ++n)
    for_each_free_tree(n, [&](const Tree& t) {
      ++trees;
      if (!median_path_is_increasing(t)) ok = false;
      return true;
    });
  std::mt19937 rng(seed);
  for (int iter = 0; iter < trials; ++iter) {
    ++trees;
    if (!median_path_is_increasing(random_tree(40, rng))) ok = false;
  }
  out << "# trees checked: " << trees << "\n";
  CheckResult r;
  r.pass = ok;
  r.summary = "statuses strictly increase away from the median on " + std::to_string(trees) +
              " trees";
  return r;
}

CheckResult check_reduction_roundtrip(std::ostream& out) {
  bool ok = true;
  auto roundtrip = [&](const ThreePartitionInstance& inst) {
    auto part = brute_force_3partition(inst);
    if (!part) {
      ok = false;
      return;
    }
    Tree gadget = build_gadget_tree(inst, *part);
    if (status_sequence(gadget.graph()) != reduce_3partition(inst)) ok = false;
    auto recovered = extract_partition(gadget, inst);
    for (const auto& triple : recovered.triples()) {
      Status sum = 0;
      for (int idx : triple) sum += inst.elements()[idx];
      if (sum != inst.B()) ok = false;
    }
  };
  roundtrip(ThreePartitionInstance({5, 6, 7}));
  roundtrip(ThreePartitionInstance({5, 6, 7, 5, 6, 7}));
  out << "# gadget status sequences match the closed forms\n";

  ThreePartitionInstance no_instance = pad_instance(ThreePartitionInstance({5, 5, 5, 5, 5, 7}));
  if (brute_force_3partition(no_instance).has_value()) ok = false;
  if (srt_d3_realize(reduce_3partition(no_instance), 2).has_value()) ok = false;
  out << "# padded no-instance is not depth-3 realizable at delta 2\n";

  ThreePartitionInstance yes_instance = pad_instance(ThreePartitionInstance({5, 6, 7, 5, 6, 7}));
  auto t = srt_d3_realize(reduce_3partition(yes_instance), 2);
  if (!t || status_sequence(t->graph()) != reduce_3partition(yes_instance)) ok = false;
  out << "# padded yes-instance realizes and verifies\n";

  CheckResult r;
  r.pass = ok;
  r.summary = "gadget build/extract roundtrips and the solver agrees with brute force";
  return r;
}

// ---- commands --------------------------------------------------------------

struct Options {
  bool json = false;
  unsigned seed = 0;
};

void emit(std::ostream& out, const Options& opt, const json& doc, const std::string& text) {
  if (opt.json)
    out << doc.dump(2) << '\n';
  else
    out << text;
}

int cmd_status(const std::string& file, const Options& opt, std::ostream& out) {
  auto lg = load_graph(file);
  auto statuses = status_by_vertex(lg.graph);
  auto seq = statuses;
  std::sort(seq.begin(), seq.end());
  std::ostringstream text;
  text << "# order " << lg.graph.order() << ", distinct statuses "
       << distinct_status_count(lg.graph) << "\n";
  for (Vertex v = 0; v < lg.graph.order(); ++v)
    text << "# s(" << lg.labels[v] << ") = " << statuses[v] << "\n";
  text << format_sequence(seq);
  json doc{{"command", "status"},
           {"verdict", "ok"},
           {"sequence", seq},
           {"distinct", distinct_status_count(lg.graph)}};
  doc["statuses"] = json::array();
  for (Vertex v = 0; v < lg.graph.order(); ++v)
    doc["statuses"].push_back({lg.labels[v], statuses[v]});
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_realize_injective(const std::string& file, const Options& opt, std::ostream& out) {
  auto values = load_values(file);
  auto seq = InjectiveSequence::from_values(values);
  auto r = realize_injective(seq);
  std::sort(values.begin(), values.end());
  if (!r) {
    emit(out, opt,
         json{{"command", "realize-injective"}, {"verdict", "not-realizable"},
              {"sequence", values}},
         "# realizable: no\n");
    return kExitNegative;
  }
  std::ostringstream text;
  text << "# realizable: yes\n# edges labeled by status value\n";
  print_edges(text, r->tree.edges(), r->status_of);
  json doc{{"command", "realize-injective"},
           {"verdict", "realizable"},
           {"sequence", values},
           {"edges", edges_to_json(r->tree.edges(), r->status_of)}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_realize_exhaustive(const std::string& file, const Options& opt, std::ostream& out) {
  auto values = load_values(file);
  StatusSequence seq(values.begin(), values.end());
  std::sort(seq.begin(), seq.end());
  auto trees = realize_exhaustive(seq);
  std::ostringstream text;
  text << "# realizations: " << trees.size() << "\n";
  json witness = json::array();
  for (std::size_t i = 0; i < trees.size(); ++i) {
    text << "# tree " << i + 1 << "\n";
    print_edges(text, trees[i].edges(), dense_labels(trees[i].order()));
    witness.push_back(edges_to_json(trees[i].edges(), dense_labels(trees[i].order())));
  }
  json doc{{"command", "realize-exhaustive"},
           {"verdict", trees.empty() ? "not-realizable" : "realizable"},
           {"sequence", seq},
           {"witness", witness}};
  emit(out, opt, doc, text.str());
  return trees.empty() ? kExitNegative : kExitOk;
}

int cmd_status_unique(const std::string& file, const Options& opt, std::ostream& out) {
  auto lg = load_graph(file);
  Tree t(lg.graph);
  auto seq = status_sequence(t.graph());
  bool unique = true;
  std::optional<Tree> counterexample;
  auto self = canonical_form(t);
  for_each_free_tree(t.order(), [&](const Tree& other) {
    auto s = status_sequence(other.graph());
    if (s == seq && canonical_form(other) != self) {
      unique = false;
      counterexample = other;
      return false;
    }
    return true;
  });
  std::ostringstream text;
  json doc{{"command", "status-unique"}, {"verdict", unique ? "unique" : "not-unique"},
           {"sequence", seq}};
  if (unique) {
    text << "# status unique in trees: yes\n";
  } else {
    text << "# status unique in trees: no\n# a non-isomorphic tree with the same sequence\n";
    print_edges(text, counterexample->edges(), dense_labels(counterexample->order()));
    doc["witness"] = edges_to_json(counterexample->edges(), dense_labels(counterexample->order()));
  }
  emit(out, opt, doc, text.str());
  return unique ? kExitOk : kExitNegative;
}

int cmd_reduce(const std::string& file, bool pad, const Options& opt, std::ostream& out) {
  ThreePartitionInstance inst(load_values(file));
  if (pad) inst = pad_instance(inst);
  auto seq = reduce_3partition(inst);
  std::ostringstream text;
  text << "# m = " << inst.m() << ", A = " << inst.A() << ", B = " << inst.B()
       << ", sequence size = " << seq.size() << "\n";
  text << format_sequence(seq);
  json doc{{"command", "reduce"},
           {"verdict", "ok"},
           {"sequence", seq},
           {"witness", {{"m", inst.m()}, {"A", inst.A()}, {"B", inst.B()}}}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

std::vector<std::array<int, 3>> parse_triples(const std::vector<std::int64_t>& tokens) {
  if (tokens.size() % 3 != 0)
    throw std::invalid_argument("partition file must contain 3m element indices");
  std::vector<std::array<int, 3>> triples;
  for (std::size_t i = 0; i < tokens.size(); i += 3)
    triples.push_back({static_cast<int>(tokens[i]), static_cast<int>(tokens[i + 1]),
                       static_cast<int>(tokens[i + 2])});
  return triples;
}

int cmd_gadget(const std::string& inst_file, const std::string& part_file, const Options& opt,
               std::ostream& out) {
  ThreePartitionInstance inst(load_values(inst_file));
  TripletPartition part(inst, parse_triples(load_values(part_file)));
  Tree gadget = build_gadget_tree(inst, part);
  std::ostringstream text;
  text << "# gadget order " << gadget.order() << "\n";
  print_edges(text, gadget.edges(), dense_labels(gadget.order()));
  json doc{{"command", "gadget"},
           {"verdict", "ok"},
           {"edges", edges_to_json(gadget.edges(), dense_labels(gadget.order()))},
           {"sequence", status_sequence(gadget.graph())}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_extract(const std::string& tree_file, const std::string& inst_file, const Options& opt,
                std::ostream& out) {
  auto lg = load_graph(tree_file);
  Tree t(lg.graph);
  ThreePartitionInstance inst(load_values(inst_file));
  std::optional<TripletPartition> part;
  try {
    part = extract_partition(t, inst);
  } catch (const std::invalid_argument& e) {
    emit(out, opt,
         json{{"command", "extract"}, {"verdict", "mismatch"}, {"witness", e.what()}},
         std::string("# not a gadget realization: ") + e.what() + "\n");
    return kExitNegative;
  }
  std::ostringstream text;
  json indices = json::array(), values = json::array();
  text << "# triples as element indices / values\n";
  for (const auto& triple : part->triples()) {
    text << triple[0] << " " << triple[1] << " " << triple[2] << "  #";
    json idx = json::array(), val = json::array();
    for (int i : triple) {
      text << " " << inst.elements()[i];
      idx.push_back(i);
      val.push_back(inst.elements()[i]);
    }
    text << "\n";
    indices.push_back(idx);
    values.push_back(val);
  }
  json doc{{"command", "extract"},
           {"verdict", "ok"},
           {"witness", {{"indices", indices}, {"values", values}, {"B", inst.B()}}}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_srt_d3(const std::string& file, int delta, const Options& opt, std::ostream& out) {
  auto values = load_values(file);
  StatusSequence seq(values.begin(), values.end());
  std::sort(seq.begin(), seq.end());
  auto t = srt_d3_realize(seq, delta);
  if (!t) {
    emit(out, opt,
         json{{"command", "srt-d3"}, {"verdict", "not-realizable"}, {"sequence", seq}},
         "# realizable: no\n");
    return kExitNegative;
  }
  std::ostringstream text;
  text << "# realizable: yes (delta " << delta << ")\n";
  print_edges(text, t->edges(), dense_labels(t->order()));
  json doc{{"command", "srt-d3"},
           {"verdict", "realizable"},
           {"sequence", seq},
           {"edges", edges_to_json(t->edges(), dense_labels(t->order()))}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_family(const std::string& kind, int n, int a, int b, int leaves,
               const std::string& legs_csv, const Options& opt, std::ostream& out) {
  FamilySpec spec{};
  if (kind == "path") {
    spec = FamilySpec::path(n);
  } else if (kind == "star") {
    spec = FamilySpec::star(leaves);
  } else if (kind == "double-star") {
    spec = FamilySpec::double_star(a, b);
  } else if (kind == "balanced-double-star") {
    spec = FamilySpec::balanced_double_star(a);
  } else if (kind == "t-star") {
    spec = FamilySpec::family_t_star(leaves, b);
  } else if (kind == "t-double-star") {
    spec = FamilySpec::family_t_double_star(a, b);
  } else if (kind == "spider") {
    std::vector<int> legs;
    std::stringstream ss(legs_csv);
    std::string item;
    while (std::getline(ss, item, ',')) legs.push_back(std::stoi(item));
    spec = FamilySpec::spider(legs);
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  Tree t = generate(spec);
  std::ostringstream text;
  text << "# " << kind << " of order " << t.order() << "\n";
  print_edges(text, t.edges(), dense_labels(t.order()));
  json doc{{"command", "family"},
           {"verdict", "ok"},
           {"edges", edges_to_json(t.edges(), dense_labels(t.order()))},
           {"sequence", status_sequence(t.graph())}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_gm(int m, const Options& opt, std::ostream& out) {
  Graph g = generate_gm(m);
  std::ostringstream text;
  text << "# order " << g.order() << ": a = 0, b = 1, a(i,j) = 2 + i*m + j, "
       << "b(i,j) = 2 + m*m + i*m + j\n";
  print_edges(text, g.edges(), dense_labels(g.order()));
  json doc{{"command", "gm"},
           {"verdict", "ok"},
           {"edges", edges_to_json(g.edges(), dense_labels(g.order()))}};
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_partitions(const std::string& file, const std::string& base_name, int orbit_cap,
                   const Options& opt, std::ostream& out) {
  auto lg = load_graph(file);
  QuotientBase base =
      base_name == "distance" ? QuotientBase::kDistance : QuotientBase::kAdjacency;
  auto sp = status_partition(lg.graph);
  auto orbits = orbit_partition(lg.graph, orbit_cap);
  bool equitable = is_equitable(lg.graph, sp, base);
  auto q = quotient_matrix(lg.graph, sp, base);

  std::ostringstream text;
  text << "# status partition (" << sp.size() << " parts)\n";
  print_parts(text, sp, lg.labels);
  text << "# orbit partition (" << orbits.orbits.size() << " parts";
  if (orbits.group_order) text << ", group order " << *orbits.group_order;
  text << ")\n";
  print_parts(text, orbits.orbits, lg.labels);
  text << "# orbit refines status: " << (refines(orbits.orbits, sp) ? "yes" : "no") << "\n";
  text << "# status partition equitable (" << base_name << "): " << (equitable ? "yes" : "no")
       << "\n";
  text << "# quotient matrix of the status partition\n";
  for (int i = 0; i < q.p; ++i) {
    for (int j = 0; j < q.p; ++j) text << (j ? " " : "") << q.at(i, j).str();
    text << "\n";
  }

  json quotient = json::array();
  for (int i = 0; i < q.p; ++i) {
    json row = json::array();
    for (int j = 0; j < q.p; ++j) row.push_back(q.at(i, j).str());
    quotient.push_back(row);
  }
  json doc{{"command", "partitions"},
           {"verdict", "ok"},
           {"base", base_name},
           {"status_partition", parts_to_json(sp, lg.labels)},
           {"orbit_partition", parts_to_json(orbits.orbits, lg.labels)},
           {"orbit_refines_status", refines(orbits.orbits, sp)},
           {"equitable", equitable},
           {"quotient", quotient}};
  if (orbits.group_order) doc["group_order"] = *orbits.group_order;
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_check(const std::string& name, std::optional<int> max_n, int trials, const Options& opt,
              std::ostream& out) {
  std::ostringstream text;
  CheckResult result;
  if (name == "k-bound") {
    result = check_k_bound_sweep(max_n.value_or(12), text);
  } else if (name == "k2-char") {
    result = check_k_char(max_n.value_or(12), false, text);
  } else if (name == "k3-char") {
    result = check_k_char(max_n.value_or(12), true, text);
  } else if (name == "injective-unique") {
    result = check_injective_unique(max_n.value_or(10), opt.seed, text);
  } else if (name == "orbit-refines-status") {
    result = check_orbit_refines_status(max_n.value_or(9), text);
  } else if (name == "edge-split") {
    result = check_edge_split(max_n.value_or(10), opt.seed, trials, text);
  } else if (name == "median-monotone") {
    result = check_median_monotone(max_n.value_or(10), opt.seed, trials, text);
  } else if (name == "reduction-roundtrip") {
    result = check_reduction_roundtrip(text);
  } else {
    throw std::invalid_argument(
        "unknown check; expected one of: k-bound, k2-char, k3-char, injective-unique, "
        "orbit-refines-status, edge-split, median-monotone, reduction-roundtrip");
  }
  text << (result.pass ? "PASS " : "FAIL ") << name << ": " << result.summary << "\n";
  json doc{{"command", "check"},
           {"check", name},
           {"verdict", result.pass ? "pass" : "fail"},
           {"witness", result.summary}};
  emit(out, opt, doc, text.str());
  return result.pass ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"status sequences of trees: computation, realization, hardness gadgets, "
               "and vertex partitions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "emit one machine-readable JSON document");
  app.add_option("--seed", opt.seed, "seed for randomized property sweeps");

  std::string file, second_file, base_name = "adjacency", kind, legs;
  int delta = 1, m = 3, n = 0, a = 0, b = 0, leaves = 0, trials = 25, orbit_cap = 20;
  bool pad = false;
  std::optional<int> max_n;

  auto* c_status = app.add_subcommand("status", "statuses of an edge-list graph");
  c_status->add_option("file", file)->required();

  auto* c_ri = app.add_subcommand("realize-injective",
                                  "realize a strictly decreasing status sequence");
  c_ri->add_option("file", file)->required();

  auto* c_re = app.add_subcommand("realize-exhaustive",
                                  "all trees realizing a sequence, by enumeration");
  c_re->add_option("file", file)->required();

  auto* c_su = app.add_subcommand("status-unique",
                                  "is the tree the only one with its sequence?");
  c_su->add_option("file", file)->required();

  auto* c_red = app.add_subcommand("reduce", "3-partition instance -> status sequence");
  c_red->add_option("file", file)->required();
  c_red->add_flag("--pad", pad, "add the constant 3B + 19m + 9 to every element first");

  auto* c_gad = app.add_subcommand("gadget", "build the depth-3 gadget tree");
  c_gad->add_option("instance", file)->required();
  c_gad->add_option("partition", second_file)->required();

  auto* c_ext = app.add_subcommand("extract", "read a triple partition off a gadget tree");
  c_ext->add_option("tree", file)->required();
  c_ext->add_option("instance", second_file)->required();

  auto* c_d3 = app.add_subcommand("srt-d3", "depth-3 bounded-degree realizability");
  c_d3->add_option("file", file)->required();
  c_d3->add_option("--delta", delta, "root degree bound")->required();

  auto* c_fam = app.add_subcommand("family", "generate a named tree family");
  c_fam->add_option("kind", kind,
                    "path|star|double-star|balanced-double-star|t-star|t-double-star|spider")
      ->required();
  c_fam->add_option("--n", n, "path order");
  c_fam->add_option("--a", a, "first pendant count");
  c_fam->add_option("--b", b, "second pendant count");
  c_fam->add_option("--leaves", leaves, "star leaf count");
  c_fam->add_option("--legs", legs, "spider leg lengths, comma separated");

  auto* c_gm = app.add_subcommand("gm", "the twisted matching construction");
  c_gm->add_option("m", m)->required()->check(CLI::Range(3, 12));

  auto* c_part = app.add_subcommand("partitions", "status/orbit partitions and quotients");
  c_part->add_option("file", file)->required();
  c_part->add_option("--base", base_name, "adjacency|distance")
      ->check(CLI::IsMember({"adjacency", "distance"}));
  c_part->add_option("--orbit-cap", orbit_cap, "general automorphism search cap");

  auto* c_check = app.add_subcommand("check", "desk-scale verification suites");
  c_check->add_option("name", kind)->required();
  c_check->add_option("--max-n", max_n, "enumeration bound");
  c_check->add_option("--trials", trials, "randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*c_status) return cmd_status(file, opt, out);
    if (*c_ri) return cmd_realize_injective(file, opt, out);
    if (*c_re) return cmd_realize_exhaustive(file, opt, out);
    if (*c_su) return cmd_status_unique(file, opt, out);
    if (*c_red) return cmd_reduce(file, pad, opt, out);
    if (*c_gad) return cmd_gadget(file, second_file, opt, out);
    if (*c_ext) return cmd_extract(file, second_file, opt, out);
    if (*c_d3) return cmd_srt_d3(file, delta, opt, out);
    if (*c_fam) return cmd_family(kind, n, a, b, leaves, legs, opt, out);
    if (*c_gm) return cmd_gm(m, opt, out);
    if (*c_part) return cmd_partitions(file, base_name, orbit_cap, opt, out);
    if (*c_check) return cmd_check(kind, max_n, trials, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no subcommand\n";
  return kExitInputError;
}

}  // namespace statseq::cli
