// schubsing: singularity invariants of type-A Schubert varieties from the
// command line. Combinatorial queries (pattern avoidance, loci) and
// commutative-algebra queries (defining ideals, Groebner bases, Betti
// tables, multiplicities) share one permutation-pair interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schub/groebner.hpp"
#include "schub/invariants.hpp"
#include "schub/klpoly.hpp"
#include "schub/resolution.hpp"

using namespace schub;
using nlohmann::ordered_json;

namespace {

constexpr const char* kArtifactVersion = "1";

struct GlobalOpts {
  bool json = false;
  bool no_cache = false;
  bool zero_indexed = false;
  bool stable = false;
  long timeout_secs = 0;  // 0 = unlimited
  std::string cache_dir;
};

std::string cache_path(const GlobalOpts& g) {
  std::string dir = g.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("SCHUBSING_CACHE_DIR")) dir = env;
  if (dir.empty()) return "";
  return dir + "/cache.jsonl";
}

std::string cache_key(const std::string& op, const std::string& x,
                      const std::string& w, bool json) {
  return op + "|" + x + "|" + w + "|" + (json ? "json" : "text") + "|" +
         kArtifactVersion;
}

bool cache_get(const GlobalOpts& g, const std::string& key,
               std::string& value) {
  if (g.no_cache) return false;
  const std::string path = cache_path(g);
  if (path.empty()) return false;
  std::ifstream in(path);
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = ordered_json::parse(line);
      if (j.at("key").get<std::string>() == key) {
        value = j.at("value").get<std::string>();
        found = true;  // last write wins
      }
    } catch (const std::exception&) {
      std::cerr << "warning: skipping corrupt cache line\n";
    }
  }
  return found;
}

void cache_put(const GlobalOpts& g, const std::string& key,
               const std::string& value) {
  if (g.no_cache) return;
  const std::string path = cache_path(g);
  if (path.empty()) return;
  ordered_json j;
  j["key"] = key;
  j["value"] = value;
  j["ts"] = g.stable ? 0
                     : std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
  std::ofstream out(path, std::ios::app);
  out << j.dump() << "\n";
}

Permutation parse_perm(const std::string& s, const GlobalOpts& g) {
  return Permutation::parse(s, g.zero_indexed);
}

std::string perm_str(const Permutation& p, const GlobalOpts& g) {
  if (!g.zero_indexed) return p.str();
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (!out.empty() && p.n() > 9) out += ",";
    out += std::to_string(p(i) - 1);
  }
  return out;
}

std::string betti_text(const BettiTable& b) {
  std::ostringstream os;
  os << "total:";
  for (int t : b.total) os << " " << t;
  os << "\n";
  // Grid row r, column i holds beta_{i, r+i}.
  int max_row = 0;
  for (const auto& [key, cnt] : b.graded)
    max_row = std::max(max_row, key.second - key.first);
  const int cols = static_cast<int>(b.total.size());
  for (int r = 0; r <= max_row; ++r) {
    os << r << ":";
    for (int i = 0; i < cols; ++i) {
      const auto it = b.graded.find({i, r + i});
      if (it == b.graded.end())
        os << " .";
      else
        os << " " << it->second;
    }
    os << "\n";
  }
  return os.str();
}

ordered_json betti_json(const BettiTable& b) {
  ordered_json j;
  j["total"] = b.total;
  j["graded"] = ordered_json::array();
  for (const auto& [key, cnt] : b.graded)
    j["graded"].push_back({key.first, key.second, cnt});
  return j;
}

InvariantReport full_report(const Permutation& x, const Permutation& w) {
  SurveyOptions opt;
  opt.with_cm_type = w.n() <= 6;
  opt.with_lci = w.n() <= 6;
  opt.with_kl_poly = true;
  return invariant_report(x, w, opt);
}

// ---- repro: replay the documented worked examples; exit 0 iff all hold ----

int repro(const std::string& id, const GlobalOpts& g) {
  if (id.empty()) {
    for (const char* known :
         {"embedding-s9", "avoidance-265314", "ideal-35142",
          "isomorphism-35142", "singular-locus-461253",
          "non-gorenstein-461253", "betti-35142", "betti-461253",
          "mult-35142", "survey-n5"})
      std::cout << known << "\n";
    return 0;
  }
  int failures = 0;
  const auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  const auto P = [](const char* s) { return Permutation::parse(s); };

  if (id == "embedding-s9") {
    const Permutation u = P("13524"), v = P("35142");
    const Permutation w = Permutation::parse("5,8,9,7,1,6,2,3,4");
    const Embedding phi{{1, 4, 5, 6, 8}};
    check(phi_image(u, v, w, phi) == Permutation::parse("1,8,9,5,7,3,2,6,4"),
          "phi image is 189573264");
    check(w.length() == 24 && phi_image(u, v, w, phi).length() == 21,
          "lengths 24 and 21");
    check(is_interval_embedding(u, v, w, phi), "interval embedding");
    check(verify_interval_isomorphism(u, v, w, phi),
          "explicit coordinate isomorphism");
  } else if (id == "avoidance-265314") {
    const Permutation w = P("265314");
    const auto embs = classical_embeddings(P("2413"), w);
    check(embs.size() == 2, "two classical embeddings of 2413");
    check(interval_avoids(w, {{P("2143"), P("2413")}}),
          "interval avoids [2143,2413]");
  } else if (id == "ideal-35142") {
    const KLIdealSpec spec = kl_ideal(P("13254"), P("35142"));
    check(spec.generators.size() == 9, "nine defining minors");
    check(first_betti(spec) == 5, "five minimal generators");
  } else if (id == "isomorphism-35142") {
    const KLIdealSpec spec = kl_ideal(P("13524"), P("35142"));
    const GroebnerBasis G =
        buchberger(spec.generators, TermOrder{TermOrder::Kind::GradedDiagonal});
    check(G.generators.size() == 4 && spec.ring->size() == 7,
          "ideal is four coordinates in seven variables");
  } else if (id == "singular-locus-461253") {
    const auto pts = singular_locus(P("461253"));
    const std::set<Permutation> got(pts.begin(), pts.end());
    check(got == std::set<Permutation>{P("142653"), P("241365"), P("143265")},
          "max points 142653, 241365, 143265");
  } else if (id == "non-gorenstein-461253") {
    const auto loc = non_gorenstein_locus(P("461253"));
    const std::set<Permutation> got(loc.max_points.begin(),
                                    loc.max_points.end());
    check(got == std::set<Permutation>{P("241365"), P("143265")},
          "non-Gorenstein below 241365 or 143265");
    check(cm_type(kl_ideal(P("123546"), P("461253"))) == 1,
          "type 1 at 123546");
  } else if (id == "betti-35142") {
    const BettiTable b = betti_table(kl_ideal(P("13254"), P("35142")));
    check(b.total == std::vector<int>{1, 5, 9, 7, 2}, "totals 1 5 9 7 2");
  } else if (id == "betti-461253") {
    const BettiTable b = betti_table(kl_ideal(P("123546"), P("461253")));
    check(b.total == std::vector<int>{1, 7, 21, 35, 35, 21, 7, 1},
          "Koszul totals of a codimension-7 complete intersection");
  } else if (id == "mult-35142") {
    check(multiplicity_at(P("13254"), P("35142")) == 3,
          "multiplicity 3 at 13254 (tangent cone (1+2t)/(1-t)^4)");
    check(multiplicity_at(P("2143"), P("4231")) == 2, "multiplicity 2");
    check(multiplicity_at(P("21354"), P("52341")) == 5, "multiplicity 5");
  } else if (id == "survey-n5") {
    SurveyOptions opt;
    opt.only_w = P("52341");
    for (const InvariantReport& r : survey(5, opt)) {
      const long expect =
          r.smooth ? 1 : (bruhat_leq(r.x, P("21354")) ? 5 : 2);
      if (r.multiplicity != expect) {
        check(false, "X_52341 multiplicity at " + r.x.str());
        break;
      }
    }
    check(true, "X_52341 multiplicity table (5 below 21354, else 2, 1 smooth)");
  } else {
    std::cerr << "unknown repro id: " << id
              << " (try: embedding-s9 avoidance-265314 ideal-35142 "
                 "isomorphism-35142 singular-locus-461253 "
                 "non-gorenstein-461253 betti-35142 betti-461253 mult-35142 "
                 "survey-n5)\n";
    return 2;
  }
  (void)g;
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity invariants of type-A Schubert varieties"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_flag("--no-cache", g.no_cache, "bypass the result cache");
  app.add_flag("--zero-indexed", g.zero_indexed,
               "permutations use entries 0..n-1");
  app.add_flag("--stable", g.stable, "suppress timestamps in cache entries");
  app.add_option("--cache-dir", g.cache_dir,
                 "cache directory (default $SCHUBSING_CACHE_DIR)");
  app.add_option("--timeout-secs", g.timeout_secs,
                 "stop survey sweeps after this many seconds");

  std::string arg_w, arg_x, arg_u, arg_v, arg_kind, arg_id, arg_invariants;
  int arg_n = 0;

  auto* c_avoid = app.add_subcommand("avoid", "interval pattern avoidance");
  c_avoid->add_option("w", arg_w)->required();
  c_avoid->add_option("u", arg_u)->required();
  c_avoid->add_option("v", arg_v)->required();

  auto* c_embed = app.add_subcommand("embed", "classical embeddings of v in w");
  c_embed->add_option("v", arg_v)->required();
  c_embed->add_option("w", arg_w)->required();

  auto* c_locus = app.add_subcommand("locus", "max points of a property locus");
  c_locus->add_option("kind", arg_kind)
      ->required()
      ->check(CLI::IsMember({"sing", "gor", "fact"}));
  c_locus->add_option("w", arg_w)->required();

  const auto add_pair = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("x", arg_x)->required();
    c->add_option("w", arg_w)->required();
    return c;
  };
  auto* c_ideal = add_pair("ideal", "defining ideal of the local slice");
  auto* c_gb = add_pair("gb", "reduced Groebner basis");
  auto* c_betti = add_pair("betti", "graded Betti table");
  auto* c_cmtype = add_pair("cmtype", "Cohen-Macaulay type");
  auto* c_mult = add_pair("mult", "multiplicity at the point");
  auto* c_klpoly = add_pair("klpoly", "Kazhdan-Lusztig polynomial");
  auto* c_report = add_pair("report", "full invariant report (JSON)");

  auto* c_survey = app.add_subcommand("survey", "sweep all pairs in S_n");
  c_survey->add_option("n", arg_n)->required()->check(CLI::Range(1, 7));
  c_survey->add_option("--invariants", arg_invariants,
                       "comma list: cmtype,lci,klpoly");

  auto* c_repro = app.add_subcommand(
      "repro", "replay a documented example (no id: list available ids)");
  c_repro->add_option("id", arg_id);

  // Let global flags appear after the subcommand name as well.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_avoid->parsed()) {
      const Permutation w = parse_perm(arg_w, g);
      const IntervalPattern pat{{parse_perm(arg_u, g), parse_perm(arg_v, g)}};
      const bool avoids = interval_avoids(w, pat);
      if (g.json)
        std::cout << ordered_json{{"avoids", avoids}}.dump() << "\n";
      else
        std::cout << (avoids ? "avoids" : "contains") << "\n";
      return avoids ? 0 : 1;
    }
    if (c_embed->parsed()) {
      const auto embs =
          classical_embeddings(parse_perm(arg_v, g), parse_perm(arg_w, g));
      if (g.json) {
        ordered_json j = ordered_json::array();
        for (const Embedding& e : embs) j.push_back(e.indices);
        std::cout << ordered_json{{"embeddings", j}}.dump() << "\n";
      } else {
        for (const Embedding& e : embs) {
          for (size_t i = 0; i < e.indices.size(); ++i)
            std::cout << (i ? " " : "") << e.indices[i];
          std::cout << "\n";
        }
      }
      return embs.empty() ? 1 : 0;
    }
    if (c_locus->parsed()) {
      const Permutation w = parse_perm(arg_w, g);
      std::vector<Permutation> pts;
      bool conjectural = false;
      if (arg_kind == "sing") {
        pts = singular_locus(w);
      } else if (arg_kind == "gor") {
        const ConjecturalLocus loc = non_gorenstein_locus(w);
        pts = loc.max_points;
        conjectural = loc.conjectural;
      } else {
        pts = locus_max_points(w, factorial_generators(w.n()));
      }
      if (g.json) {
        ordered_json j = ordered_json::array();
        for (const Permutation& p : pts) j.push_back(perm_str(p, g));
        std::cout << ordered_json{{"max_points", j},
                                  {"conjectural", conjectural}}
                         .dump()
                  << "\n";
      } else {
        for (const Permutation& p : pts) std::cout << perm_str(p, g) << "\n";
        if (conjectural) std::cerr << "note: conjectural for n > 6\n";
      }
      return 0;
    }

    if (c_ideal->parsed() || c_gb->parsed()) {
      const KLIdealSpec spec =
          kl_ideal(parse_perm(arg_x, g), parse_perm(arg_w, g));
      std::vector<Polynomial> gens = spec.generators;
      if (c_gb->parsed())
        gens = buchberger(gens, TermOrder{TermOrder::Kind::GradedDiagonal})
                   .generators;
      if (g.json) {
        ordered_json j = ordered_json::array();
        for (const Polynomial& p : gens) j.push_back(p.str());
        std::cout << ordered_json{{"generators", j}}.dump() << "\n";
      } else {
        for (const Polynomial& p : gens) std::cout << p.str() << "\n";
      }
      return 0;
    }

    if (c_betti->parsed() || c_cmtype->parsed() || c_mult->parsed() ||
        c_klpoly->parsed() || c_report->parsed()) {
      const std::string op = c_betti->parsed()    ? "betti"
                             : c_cmtype->parsed() ? "cmtype"
                             : c_mult->parsed()   ? "mult"
                             : c_klpoly->parsed() ? "klpoly"
                                                  : "report";
      const Permutation x = parse_perm(arg_x, g);
      const Permutation w = parse_perm(arg_w, g);
      const std::string key = cache_key(op, x.str(), w.str(), g.json);
      std::string out;
      if (!cache_get(g, key, out)) {
        if (op == "betti") {
          const BettiTable b = betti_table(kl_ideal(x, w));
          out = g.json ? betti_json(b).dump() + "\n" : betti_text(b);
        } else if (op == "cmtype") {
          out = std::to_string(cm_type(kl_ideal(x, w)));
          if (g.json) out = ordered_json{{"cm_type", cm_type(kl_ideal(x, w))}}.dump();
          out += "\n";
        } else if (op == "mult") {
          const long m = multiplicity_at(x, w);
          out = (g.json ? ordered_json{{"mult", m}}.dump()
                        : std::to_string(m)) +
                "\n";
        } else if (op == "klpoly") {
          const KLPolynomial p = kl_polynomial(x, w);
          out = (g.json ? ordered_json{{"coeff", p.coeff}}.dump() : p.str()) +
                "\n";
        } else {
          out = full_report(x, w).json() + "\n";
        }
        cache_put(g, key, out);
      }
      std::cout << out;
      return 0;
    }

    if (c_survey->parsed()) {
      SurveyOptions opt;
      opt.with_cm_type = arg_invariants.find("cmtype") != std::string::npos;
      opt.with_lci = arg_invariants.find("lci") != std::string::npos;
      opt.with_kl_poly = arg_invariants.find("klpoly") != std::string::npos;
      const auto start = std::chrono::steady_clock::now();
      for (const Permutation& w : all_permutations(arg_n))
        for (const Permutation& x :
             interval_elements({Permutation::identity(arg_n), w})) {
          if (g.timeout_secs > 0 &&
              std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                      .count() >= g.timeout_secs) {
            std::cerr << "timeout: survey stopped early\n";
            return 1;
          }
          std::cout << invariant_report(x, w, opt).json() << "\n";
        }
      return 0;
    }

    if (c_repro->parsed()) return repro(arg_id, g);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    // Bad input text is a parse error; violated mathematical preconditions
    // (e.g. x not below w) are reported separately.
    if (what.find("not below") != std::string::npos ||
        what.find("not an interval") != std::string::npos)
      return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
