#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "planecol/class_check.hpp"
#include "planecol/colorer.hpp"
#include "planecol/generator.hpp"
#include "planecol/structure.hpp"

using namespace planecol;

namespace {

std::vector<int> walk_from_csv(const PlaneGraph& g, const std::string& csv) {
  std::vector<int> walk;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      auto v = g.index_of(cur);
      REQUIRE(v.has_value());
      walk.push_back(*v);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return walk;
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
  PlaneGraph a = generate(GenParams{12, 99, true, true, 200});
  PlaneGraph b = generate(GenParams{12, 99, true, true, 200});
  CHECK(serialize_pg1(a) == serialize_pg1(b));
  PlaneGraph c = generate(GenParams{12, 100, true, true, 200});
  CHECK(serialize_pg1(a) != serialize_pg1(c));
}

TEST_CASE("generated batches pass the class check") {
  int count = 0;
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    PlaneGraph g = generate(GenParams{20, seed, seed % 2 == 0, true, 200});
    CHECK(check_class(g).in_class);
    CHECK(g.connected());
    if (seed % 2 == 0) CHECK(has_cycle(g, 3));
    CHECK((has_cycle(g, 4) || has_cycle(g, 6)));
    ++count;
  }
  CHECK(count == 40);
}

TEST_CASE("require_triangle=false can yield triangle-free graphs that are still in class") {
  PlaneGraph g = generate(GenParams{14, 31337, false, false, 200});
  CHECK(check_class(g).in_class);
}

TEST_CASE("impossible flag combinations exhaust the attempt budget") {
  // At 3 vertices the only class graph is the triangle, which has no 4- or
  // 6-cycle.
  try {
    generate(GenParams{3, 1, true, true, 5});
    FAIL("expected ExhaustedAttempts");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExhaustedAttempts);
  }
}

TEST_CASE("add_path_across_face splits degrees as off+len and d-off+len") {
  PlaneGraph g = cycle_graph(9);
  PlaneGraph h = add_path_across_face(g, 0, 1, 5, 3);
  std::vector<int> ds;
  for (const auto& f : h.faces()) ds.push_back(f.degree());
  std::sort(ds.begin(), ds.end());
  CHECK(ds == std::vector<int>{7, 8, 9});
}

TEST_CASE("curated corpus reproduces its recorded outcomes") {
  for (const CorpusEntry& e : curated_corpus()) {
    CAPTURE(e.name);
    const PlaneGraph& g = e.graph;
    CHECK(std::to_string(g.vertex_count()) == e.expected.at("n"));

    if (auto it = e.expected.find("in_class"); it != e.expected.end())
      CHECK(check_class(g).in_class == (it->second == "true"));

    if (auto it = e.expected.find("triangle_count"); it != e.expected.end())
      CHECK(std::to_string(check_class(g).triangle_count) == it->second);

    if (auto it = e.expected.find("faces"); it != e.expected.end())
      CHECK(std::to_string(g.face_count()) == it->second);

    if (auto it = e.expected.find("witness"); it != e.expected.end()) {
      ClassReport r = check_class(g);
      if (it->second == "five_cycle") CHECK(r.five_cycle_witness.has_value());
      if (it->second == "seven_cycle") CHECK(r.seven_cycle_witness.has_value());
      if (it->second == "adjacent_triangles") CHECK(r.adjacent_triangle_witness.has_value());
    }

    int outer = -1;
    if (auto it = e.expected.find("outer_walk"); it != e.expected.end()) {
      auto f = find_face(g, walk_from_csv(g, it->second));
      REQUIRE(f.has_value());
      outer = *f;
    }

    if (auto it = e.expected.find("ears_outer"); it != e.expected.end())
      CHECK(std::to_string(find_ears(g, outer).size()) == it->second);

    if (auto it = e.expected.find("collapses_outer"); it != e.expected.end())
      CHECK(std::to_string(enumerate_collapses(g, outer).size()) == it->second);

    if (auto it = e.expected.find("special_outer"); it != e.expected.end())
      CHECK(is_special_face(g, outer).valid == (it->second == "true"));

    if (auto it = e.expected.find("violation"); it != e.expected.end()) {
      auto cert = is_special_face(g, outer);
      REQUIRE(cert.violation.has_value());
      CHECK((it->second == "d_claw") ==
            (cert.violation->kind == SpecialViolation::DClawCenter));
      if (e.expected.count("violation_state_positive")) CHECK(cert.violation->state > 0);
    }

    if (auto it = e.expected.find("claw_labels"); it != e.expected.end()) {
      auto claws = claw_centers(g, outer);
      REQUIRE(claws.size() == 1);
      CHECK(g.label(claws[0]) == it->second);
    }

    if (auto it = e.expected.find("chord"); it != e.expected.end()) {
      auto chord_vs = walk_from_csv(g, it->second);
      auto chords = chords_of(g, make_cycle(g, g.face(outer).walk));
      REQUIRE(chords.size() == 1);
      CHECK(chords[0] == std::make_pair(std::min(chord_vs[0], chord_vs[1]),
                                        std::max(chord_vs[0], chord_vs[1])));
    }

    if (auto it = e.expected.find("eleven_cycle"); it != e.expected.end()) {
      auto cyc = make_cycle(g, walk_from_csv(g, it->second));
      if (e.expected.count("separating_11_special")) {
        CHECK(classify_cycle(g, cyc, outer).kind == CycleClass::Separating);
        CHECK(is_special_cycle(g, cyc, outer).special);
      }
    }

    if (auto it = e.expected.find("four_face"); it != e.expected.end()) {
      auto f = find_face(g, walk_from_csv(g, it->second));
      REQUIRE(f.has_value());
      CHECK(g.face(*f).degree() == 4);
    }
    if (auto it = e.expected.find("six_face"); it != e.expected.end()) {
      auto f = find_face(g, walk_from_csv(g, it->second));
      REQUIRE(f.has_value());
      CHECK(g.face(*f).degree() == 6);
    }

    if (auto it = e.expected.find("extend_outer"); it != e.expected.end()) {
      REQUIRE(outer >= 0);
      REQUIRE(face_qualifies(g, outer));
      // greedy-backtracked proper boundary coloring
      Coloring phi(g.vertex_count());
      std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        const auto& walk = g.face(outer).walk;
        if (i == walk.size()) return true;
        for (int c = 0; c < 3; ++c) {
          bool ok = true;
          for (int u : g.sorted_neighbors(walk[i]))
            if (phi.colored(u) && phi[u] == c) ok = false;
          if (!ok) continue;
          phi.set(walk[i], c);
          if (rec(i + 1)) return true;
          phi.values[walk[i]] = -1;
        }
        return false;
      };
      REQUIRE(rec(0));
      ExtensionResult r = extend_coloring(ExtensionTask{g, outer, phi});
      CHECK(verify_coloring(g, r.coloring) == (it->second == "true"));
    }

    if (auto it = e.expected.find("colorable"); it != e.expected.end()) {
      ColorResult r = color_graph(g);
      CHECK(verify_coloring(g, r.coloring) == (it->second == "true"));
    }
  }
}

TEST_CASE("checked-in corpus files match the in-memory corpus") {
  std::string dir = PLANECOL_CORPUS_DIR;
  std::ifstream manifest(dir + "/manifest.json");
  REQUIRE(manifest.good());
  for (const CorpusEntry& e : curated_corpus()) {
    CAPTURE(e.name);
    std::ifstream f(dir + "/" + e.name + ".pg");
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == serialize_pg1(e.graph));
  }
}
