#include "planecol/cli.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "planecol/class_check.hpp"
#include "planecol/colorer.hpp"
#include "planecol/generator.hpp"
#include "planecol/structure.hpp"
#include "planecol/surgery.hpp"

namespace planecol {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> resolve_labels(const PlaneGraph& g, const std::string& csv) {
  std::vector<int> out;
  for (const std::string& l : split_csv(csv)) {
    auto v = g.index_of(l);
    if (!v) fail(Errc::UnknownLabel, "unknown vertex label '" + l + "'");
    out.push_back(*v);
  }
  return out;
}

json labels_json(const PlaneGraph& g, const std::vector<int>& vs) {
  json a = json::array();
  for (int v : vs) a.push_back(g.label(v));
  return a;
}

int face_by_walk(const PlaneGraph& g, const std::string& csv) {
  auto f = find_face(g, resolve_labels(g, csv));
  if (!f) fail(Errc::NoSuchFace, "no face bounded by '" + csv + "'");
  return *f;
}

Coloring parse_col1(const PlaneGraph& g, const std::string& text) {
  Coloring c(g.vertex_count());
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label)) continue;
    int color = -1;
    if (!(ls >> color) || color < 0 || color > 2)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected '<label> <0|1|2>'");
    auto v = g.index_of(label);
    if (!v)
      fail(Errc::ParseError,
           "line " + std::to_string(lineno) + ": unknown vertex label '" + label + "'");
    c.set(*v, color);
  }
  return c;
}

std::string serialize_col1(const PlaneGraph& g, const Coloring& c) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.colored(v)) out << g.label(v) << " " << c[v] << "\n";
  return out.str();
}

json coloring_json(const PlaneGraph& g, const Coloring& c) {
  json o = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (c.colored(v)) o[g.label(v)] = c[v];
  return o;
}

json trace_json(const Trace& t) {
  json a = json::array();
  for (const TraceStep& s : t.steps)
    a.push_back({{"depth", s.depth},
                 {"kind", s.kind},
                 {"params", s.params},
                 {"sigma_before", s.sigma_before},
                 {"sigma_after", s.sigma_after}});
  return a;
}

json class_report_json(const PlaneGraph& g, const ClassReport& r) {
  json w;
  w["five_cycle"] = r.five_cycle_witness ? labels_json(g, r.five_cycle_witness->vertices) : json();
  w["seven_cycle"] =
      r.seven_cycle_witness ? labels_json(g, r.seven_cycle_witness->vertices) : json();
  if (r.adjacent_triangle_witness) {
    w["adjacent_triangles"] = json::array({labels_json(g, r.adjacent_triangle_witness->first.vertices),
                                           labels_json(g, r.adjacent_triangle_witness->second.vertices)});
  } else {
    w["adjacent_triangles"] = json();
  }
  return json{{"in_class", r.in_class}, {"witnesses", w}, {"triangle_count", r.triangle_count}};
}

json surgery_json(const PlaneGraph& g, const Surgery& s) {
  json o;
  o["op"] = surgery_kind_name(s.kind);
  json params = json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  o["params"] = params;
  json parts = json::array();
  for (const ReducedPart& part : s.parts) {
    json p;
    p["pg1"] = serialize_pg1(part.graph);
    p["face_walk"] = part.face ? labels_json(part.graph, part.graph.face(*part.face).walk) : json();
    json vm = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      vm[g.label(v)] = part.vertex_map[v] >= 0 ? json(part.graph.label(part.vertex_map[v])) : json();
    p["vertex_map"] = vm;
    json pd = json::array();
    for (auto [a, b] : part.pinned_distinct)
      pd.push_back(json::array({part.graph.label(a), part.graph.label(b)}));
    p["pinned_distinct"] = pd;
    parts.push_back(p);
  }
  o["parts"] = parts;
  o["dropped"] = labels_json(g, s.dropped);
  return o;
}

struct CommonEnvelope {
  std::string command;
  std::string input_path;
  std::string digest;
};

json envelope(const CommonEnvelope& e) {
  return json{{"command", e.command}, {"input", e.input_path}, {"input_digest", e.digest}};
}

void persist_counterexample(const std::string& path, const json& record) {
  std::ofstream out(path, std::ios::app);
  out << record.dump() << "\n";
}

// -------- audit --------

struct AuditCase {
  int index;
  std::uint64_t seed;
  int target_n;
  bool require_triangle;
};

struct AuditOutcome {
  std::vector<std::pair<std::string, bool>> checks;
};

std::vector<CycleHandle> brute_cycles(const PlaneGraph& g, int k) {
  // Independent enumeration: every k-subset, reporting each Hamiltonian cycle
  // of the induced subgraph once.
  std::set<std::vector<int>> seen;
  const int n = g.vertex_count();
  std::vector<int> pick;
  std::vector<char> used(n, 0);
  std::vector<int> path;
  std::function<void()> ham = [&]() {
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(path.back(), path.front()) && path[1] < path.back())
        seen.insert(canonical_cycle(path));
      return;
    }
    for (int u : pick) {
      if (used[u] || !g.adjacent(path.back(), u)) continue;
      used[u] = 1;
      path.push_back(u);
      ham();
      path.pop_back();
      used[u] = 0;
    }
  };
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      path = {pick[0]};
      used[pick[0]] = 1;
      ham();
      used[pick[0]] = 0;
      return;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::vector<CycleHandle> out;
  for (const auto& s : seen) out.push_back(CycleHandle{s});
  return out;
}

AuditOutcome run_audit_case(const AuditCase& c) {
  AuditOutcome o;
  PlaneGraph g;
  try {
    g = generate(GenParams{c.target_n, c.seed, c.require_triangle, true, 200});
    o.checks.push_back({"generate", true});
  } catch (const Error&) {
    o.checks.push_back({"generate", false});
    return o;
  }
  o.checks.push_back({"class", check_class(g).in_class});
  {
    int degree_sum = 0;
    for (const auto& f : g.faces()) degree_sum += f.degree();
    bool euler = degree_sum == 2 * g.edge_count() &&
                 (!g.connected() || g.vertex_count() - g.edge_count() + g.face_count() == 2);
    o.checks.push_back({"euler", euler});
  }
  if (g.vertex_count() <= 14) {
    bool agree = true;
    for (int k = 3; k <= 8; ++k) {
      auto fast = cycles_of_length(g, k);
      std::vector<std::vector<int>> fs;
      for (auto& h : fast) fs.push_back(canonical_cycle(h.vertices));
      std::sort(fs.begin(), fs.end());
      auto slow = brute_cycles(g, k);
      std::vector<std::vector<int>> ss;
      for (auto& h : slow) ss.push_back(h.vertices);
      agree = agree && fs == ss;
    }
    o.checks.push_back({"cycles_vs_brute", agree});
  }
  try {
    ColorResult cr = color_graph(g);
    o.checks.push_back({"color_verify", verify_coloring(g, cr.coloring)});
  } catch (const Error&) {
    o.checks.push_back({"color_verify", false});
  }
  if (g.vertex_count() <= 18) {
    int face = -1;
    for (int f = 0; f < g.face_count() && face < 0; ++f)
      if (face_qualifies(g, f)) face = f;
    if (face >= 0) {
      Coloring phi(g.vertex_count());
      bool built = true;
      for (int v : g.face(face).walk) {
        bool used[3] = {false, false, false};
        for (int u : g.sorted_neighbors(v))
          if (phi.colored(u)) used[phi[u]] = true;
        int col = -1;
        for (int k = 0; k < 3 && col < 0; ++k)
          if (!used[k]) col = k;
        if (col < 0) {
          built = false;
          break;
        }
        phi.set(v, col);
      }
      // Greedy walk colorings can violate an induced chord; only use proper ones.
      bool proper = built;
      if (built) {
        for (int v : g.face(face).walk)
          for (int u : g.sorted_neighbors(v))
            if (phi.colored(u) && u != v && phi[u] == phi[v]) proper = false;
      }
      if (proper) {
        bool engine_ok = false, oracle_ok = false;
        try {
          ExtensionResult er = extend_coloring(ExtensionTask{g, face, phi});
          engine_ok = verify_coloring(g, er.coloring);
        } catch (const Error& e) {
          engine_ok = e.code() == Errc::Infeasible ? false : false;
        }
        oracle_ok = brute_force_extend(g, phi).has_value();
        o.checks.push_back({"extend_oracle_agree", engine_ok == oracle_ok && engine_ok});
      }
    }
  }
  return o;
}

// -------- subcommand implementations --------

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
  std::string text = read_file(file);
  PlaneGraph g = parse_pg1(text);
  ClassReport r = check_class(g);
  json rep = envelope({"check", file, fnv1a_digest(text)});
  rep.update(class_report_json(g, r));
  out << rep.dump(2) << "\n";
  err << (r.in_class ? "in class" : "NOT in class") << " (" << g.vertex_count() << " vertices, "
      << g.edge_count() << " edges)\n";
  return 0;
}

int cmd_analyze(const std::string& file, const std::string& face_csv, const std::string& outer_csv,
                std::ostream& out, std::ostream& err) {
  std::string text = read_file(file);
  PlaneGraph g = parse_pg1(text);
  int face = face_by_walk(g, face_csv);
  int outer = outer_csv.empty() ? 0 : face_by_walk(g, outer_csv);
  const FacialWalk& fw = g.face(face);

  json rep = envelope({"analyze", file, fnv1a_digest(text)});
  rep["face"] = {{"walk", labels_json(g, fw.walk)},
                 {"degree", fw.degree()},
                 {"is_cycle", fw.is_cycle}};
  if (fw.is_cycle) {
    CycleHandle bc{fw.walk};
    CycleKind ck = classify_cycle(g, bc, outer);
    rep["classification"] = {
        {"kind", ck.kind == CycleClass::Separating ? "separating" : "facial"},
        {"interior", labels_json(g, ck.interior)},
        {"exterior", labels_json(g, ck.exterior)}};
    json chords = json::array();
    for (auto [a, b] : chords_of(g, bc)) chords.push_back(json::array({g.label(a), g.label(b)}));
    rep["chords"] = chords;
    json claws = labels_json(g, claw_centers(g, face));
    rep["claw_centers"] = claws;
    json dclaws = json::array();
    for (auto [a, b] : d_claw_centers(g, face))
      dclaws.push_back(json::array({g.label(a), g.label(b)}));
    rep["d_claw_centers"] = dclaws;
  } else {
    rep["classification"] = json();
    rep["chords"] = json();
    rep["claw_centers"] = json();
    rep["d_claw_centers"] = json();
  }
  if (fw.degree() == 11 && fw.is_cycle) {
    json ears = json::array();
    for (const EarRecord& e : find_ears(g, face))
      ears.push_back({{"span", labels_json(g, {e.span[0], e.span[1], e.span[2]})},
                      {"apex", g.label(e.apex)}});
    rep["ears"] = ears;
    SpecialFaceCertificate cert = is_special_face(g, face);
    json cj = {{"valid", cert.valid},
               {"reason", cert.reason},
               {"collapse_states", static_cast<int>(cert.collapse_set.size())}};
    cj["adjacent_triangle"] =
        cert.adjacent_triangle ? labels_json(g, cert.adjacent_triangle->vertices) : json();
    if (cert.violation) {
      const CollapseState& st = cert.collapse_set[cert.violation->state];
      cj["violation"] = {
          {"kind", cert.violation->kind == SpecialViolation::ClawCenter ? "claw_center"
                                                                        : "d_claw_center"},
          {"state", cert.violation->state},
          {"vertices", labels_json(st.graph, cert.violation->vertices)}};
    } else {
      cj["violation"] = json();
    }
    rep["special_face"] = cj;
  } else {
    rep["ears"] = json();
    rep["special_face"] = json();
  }
  out << rep.dump(2) << "\n";
  err << "analyzed face of degree " << fw.degree() << "\n";
  return 0;
}

struct ReduceArgs {
  std::string file, op, face, edge, chord, w, face4, diagonal, face6, cycle, outer;
  int k = 1;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  std::string text = read_file(a.file);
  PlaneGraph g = parse_pg1(text);
  Surgery s;
  if (a.op == "subdivide") {
    auto uv = resolve_labels(g, a.edge);
    if (uv.size() != 2) fail(Errc::InvalidArgument, "--edge expects two labels");
    s = subdivide_edge(g, uv[0], uv[1], a.k);
  } else if (a.op == "remove-subdivide") {
    auto uv = resolve_labels(g, a.chord);
    auto wv = resolve_labels(g, a.w);
    if (uv.size() != 2 || wv.size() != 1)
      fail(Errc::InvalidArgument, "--chord expects two labels and --w one");
    s = remove_and_subdivide(g, face_by_walk(g, a.face), uv[0], uv[1], wv[0]);
  } else if (a.op == "identify-diagonal") {
    auto dg = resolve_labels(g, a.diagonal);
    if (dg.size() != 2) fail(Errc::InvalidArgument, "--diagonal expects two labels");
    s = identify_diagonal(g, face_by_walk(g, a.face4), {dg[0], dg[1]});
  } else if (a.op == "identify-six") {
    auto bv = resolve_labels(g, a.face6);
    if (bv.size() != 6) fail(Errc::InvalidArgument, "--face6 expects six labels");
    std::array<int, 6> b{};
    std::copy(bv.begin(), bv.end(), b.begin());
    s = identify_six_face(g, b);
  } else if (a.op == "split") {
    CycleHandle c = make_cycle(g, resolve_labels(g, a.cycle));
    int outer = a.outer.empty() ? 0 : face_by_walk(g, a.outer);
    s = split_separating(g, c, a.k, outer);
  } else {
    fail(Errc::InvalidArgument, "unknown --op '" + a.op + "'");
  }
  json rep = envelope({"reduce", a.file, fnv1a_digest(text)});
  rep.update(surgery_json(g, s));
  out << rep.dump(2) << "\n";
  err << surgery_kind_name(s.kind) << ": " << s.parts.size() << " part(s)\n";
  return 0;
}

int cmd_color(const std::string& file, const std::string& out_path, const std::string& cex_path,
              std::ostream& out, std::ostream& err) {
  std::string text = read_file(file);
  PlaneGraph g = parse_pg1(text);
  json rep = envelope({"color", file, fnv1a_digest(text)});
  rep["sigma"] = sigma_measure(g);
  try {
    ColorResult r = color_graph(g);
    rep["feasible"] = true;
    rep["coloring"] = coloring_json(g, r.coloring);
    rep["trace"] = trace_json(r.trace);
    out << rep.dump(2) << "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << serialize_col1(g, r.coloring);
    }
    err << "colored " << g.vertex_count() << " vertices\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::Infeasible) throw;
    rep["feasible"] = false;
    out << rep.dump(2) << "\n";
    persist_counterexample(cex_path, json{{"command", "color"},
                                          {"input", file},
                                          {"input_digest", fnv1a_digest(text)},
                                          {"pg1", serialize_pg1(g)}});
    err << "infeasible; instance appended to " << cex_path << "\n";
    return 2;
  }
}

int cmd_extend(const std::string& file, const std::string& face_csv, const std::string& col_path,
               const std::string& out_path, const std::string& cex_path, std::ostream& out,
               std::ostream& err) {
  std::string text = read_file(file);
  PlaneGraph g = parse_pg1(text);
  int face = face_by_walk(g, face_csv);
  Coloring boundary = parse_col1(g, read_file(col_path));
  json rep = envelope({"extend", file, fnv1a_digest(text)});
  rep["face"] = labels_json(g, g.face(face).walk);
  try {
    ExtensionResult r = extend_coloring(ExtensionTask{g, face, boundary});
    rep["feasible"] = true;
    rep["coloring"] = coloring_json(g, r.coloring);
    rep["trace"] = trace_json(r.trace);
    out << rep.dump(2) << "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << serialize_col1(g, r.coloring);
    }
    err << "extended boundary coloring to " << g.vertex_count() << " vertices\n";
    return 0;
  } catch (const Error& e) {
    if (e.code() != Errc::Infeasible) throw;
    rep["feasible"] = false;
    out << rep.dump(2) << "\n";
    persist_counterexample(cex_path, json{{"command", "extend"},
                                          {"input", file},
                                          {"input_digest", fnv1a_digest(text)},
                                          {"pg1", serialize_pg1(g)},
                                          {"face", labels_json(g, g.face(face).walk)},
                                          {"boundary", coloring_json(g, boundary)}});
    err << "infeasible; instance appended to " << cex_path << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& file, const std::string& col_path, std::ostream& out,
               std::ostream& err) {
  std::string text = read_file(file);
  PlaneGraph g = parse_pg1(text);
  Coloring c = parse_col1(g, read_file(col_path));
  bool ok = verify_coloring(g, c);
  json rep = envelope({"verify", file, fnv1a_digest(text)});
  rep["valid"] = ok;
  out << rep.dump(2) << "\n";
  err << (ok ? "valid proper 3-coloring" : "NOT a proper total 3-coloring") << "\n";
  return ok ? 0 : 2;
}

int cmd_gen(int n, std::uint64_t seed, bool req_tri, bool req46, int max_attempts,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  PlaneGraph g = generate(GenParams{n, seed, req_tri, req46, max_attempts});
  std::string pg1 = serialize_pg1(g);
  json rep = {{"command", "gen"},
              {"generator", "planecol-gen-1"},
              {"seed", seed},
              {"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"digest", fnv1a_digest(pg1)},
              {"pg1", pg1}};
  out << rep.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << "# planecol-gen-1 seed=" << seed << " target_n=" << n;
    if (req_tri) f << " require-triangle";
    if (req46) f << " require-46";
    f << "\n" << pg1;
  }
  err << "generated " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  return 0;
}

int cmd_corpus(const std::string& dir, std::ostream& out, std::ostream& err) {
  json manifest;
  manifest["format"] = "planecol-corpus-1";
  json entries = json::array();
  for (const CorpusEntry& e : curated_corpus()) {
    std::string pg1 = serialize_pg1(e.graph);
    std::string fname = e.name + ".pg";
    {
      std::ofstream f(dir + "/" + fname);
      if (!f) fail(Errc::ParseError, "cannot write to '" + dir + "'");
      f << pg1;
    }
    json exp = json::object();
    for (const auto& [k, v] : e.expected) exp[k] = v;
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"file", fname},
                       {"digest", fnv1a_digest(pg1)},
                       {"expected", exp}});
  }
  manifest["entries"] = entries;
  {
    std::ofstream f(dir + "/manifest.json");
    f << manifest.dump(2) << "\n";
  }
  out << manifest.dump(2) << "\n";
  err << "wrote " << curated_corpus().size() << " corpus instances to " << dir << "\n";
  return 0;
}

int cmd_audit(int count, int nmin, int nmax, std::uint64_t seed, int jobs, std::ostream& out,
              std::ostream& err) {
  std::vector<AuditCase> cases;
  for (int i = 0; i < count; ++i)
    cases.push_back(AuditCase{i, seed + static_cast<std::uint64_t>(i),
                              nmin + (nmax > nmin ? i % (nmax - nmin + 1) : 0), i % 2 == 0});
  std::vector<AuditOutcome> outcomes(cases.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) outcomes[i] = run_audit_case(cases[i]);
  } else {
    std::vector<std::thread> pool;
    std::mutex mtx;
    std::size_t next = 0;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mtx);
            if (next >= cases.size()) return;
            i = next++;
          }
          outcomes[i] = run_audit_case(cases[i]);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::map<std::string, std::pair<int, int>> tally;
  json failures = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    for (const auto& [name, ok] : outcomes[i].checks) {
      if (ok)
        ++tally[name].first;
      else {
        ++tally[name].second;
        failures.push_back({{"case", static_cast<int>(i)}, {"property", name}});
      }
    }
  json rep = {{"command", "audit"}, {"cases", count}, {"seed", seed}};
  json props = json::object();
  bool all_ok = true;
  err << "property                 pass  fail\n";
  for (const auto& [name, pf] : tally) {
    props[name] = {{"pass", pf.first}, {"fail", pf.second}};
    all_ok = all_ok && pf.second == 0;
    err << name;
    for (std::size_t pad = name.size(); pad < 25; ++pad) err << ' ';
    err << pf.first << "     " << pf.second << "\n";
  }
  rep["properties"] = props;
  rep["failures"] = failures;
  out << rep.dump(2) << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plane-graph 3-coloring toolkit for graphs without 5- and 7-cycles"};
  app.require_subcommand(1);

  std::string file, face_csv, outer_csv, col_path, out_path;
  std::string cex_path = "counterexample_candidates.jsonl";

  auto* check = app.add_subcommand("check", "class membership with witnesses");
  check->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "structural detectors on a designated face");
  analyze->add_option("file", file)->required();
  analyze->add_option("--face", face_csv, "face boundary walk, comma-separated labels")->required();
  analyze->add_option("--outer", outer_csv, "designated outer face walk (defaults to face 0)");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "apply one named surgery");
  reduce->add_option("file", ra.file)->required();
  reduce->add_option("--op", ra.op, "subdivide|remove-subdivide|identify-diagonal|identify-six|split")
      ->required();
  reduce->add_option("--face", ra.face);
  reduce->add_option("--edge", ra.edge);
  reduce->add_option("--k", ra.k);
  reduce->add_option("--chord", ra.chord);
  reduce->add_option("--w", ra.w);
  reduce->add_option("--face4", ra.face4);
  reduce->add_option("--diagonal", ra.diagonal);
  reduce->add_option("--face6", ra.face6);
  reduce->add_option("--cycle", ra.cycle);
  reduce->add_option("--outer", ra.outer);

  auto* color = app.add_subcommand("color", "3-color a class graph");
  color->add_option("file", file)->required();
  color->add_option("--out", out_path, "write the coloring in col1 format");
  color->add_option("--counterexamples", cex_path);

  auto* extend = app.add_subcommand("extend", "extend a boundary 3-coloring");
  extend->add_option("file", file)->required();
  extend->add_option("--face", face_csv)->required();
  extend->add_option("--coloring", col_path)->required();
  extend->add_option("--out", out_path);
  extend->add_option("--counterexamples", cex_path);

  auto* verify = app.add_subcommand("verify", "check a coloring file");
  verify->add_option("file", file)->required();
  verify->add_option("--coloring", col_path)->required();

  int gen_n = 12, gen_attempts = 200;
  std::uint64_t seed = 1;
  bool req_tri = false, req46 = false;
  auto* gen = app.add_subcommand("gen", "generate a class graph");
  gen->add_option("--n", gen_n);
  gen->add_option("--seed", seed);
  gen->add_flag("--require-triangle", req_tri);
  gen->add_flag("--require-46", req46);
  gen->add_option("--max-attempts", gen_attempts);
  gen->add_option("--out", out_path);

  std::string corpus_dir = ".";
  auto* corpus = app.add_subcommand("corpus", "write the curated corpus and manifest");
  corpus->add_option("--out-dir", corpus_dir)->required();

  int audit_count = 50, nmin = 8, nmax = 22, jobs = 1;
  auto* audit = app.add_subcommand("audit", "run the property suite on generated batches");
  audit->add_option("--count", audit_count);
  audit->add_option("--nmin", nmin);
  audit->add_option("--nmax", nmax);
  audit->add_option("--seed", seed);
  audit->add_option("--jobs", jobs);

  bool json_flag = true;
  app.add_flag("--json,!--no-json", json_flag, "JSON reports on stdout (default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (*check) return cmd_check(file, out, err);
    if (*analyze) return cmd_analyze(file, face_csv, outer_csv, out, err);
    if (*reduce) return cmd_reduce(ra, out, err);
    if (*color) return cmd_color(file, out_path, cex_path, out, err);
    if (*extend) return cmd_extend(file, face_csv, col_path, out_path, cex_path, out, err);
    if (*verify) return cmd_verify(file, col_path, out, err);
    if (*gen) return cmd_gen(gen_n, seed, req_tri, req46, gen_attempts, out_path, out, err);
    if (*corpus) return cmd_corpus(corpus_dir, out, err);
    if (*audit) return cmd_audit(audit_count, nmin, nmax, seed, jobs, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::Infeasible:
      case Errc::ExhaustedAttempts:
        return 2;
      default:
        return 3;
    }
  }
  return 3;
}

}  // namespace planecol
