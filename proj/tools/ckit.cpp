#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ckit/covers.hpp"
#include "ckit/engine.hpp"
#include "ckit/witt.hpp"

#ifndef CKIT_DEFAULT_KNOTS
#define CKIT_DEFAULT_KNOTS "fixtures/knots.json"
#endif

using namespace ckit;
using nlohmann::json;

namespace {

struct Output {
  bool as_json = false;
  std::string out;

  void emit(const std::string& text, const json& j) const {
    const std::string s = as_json ? j.dump(2) + "\n" : text;
    if (out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << s;
  }
};

IntMatrix read_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("matrix")) throw InputError(path + ": expected {\"matrix\": [[...], ...]}");
  std::vector<std::vector<Int>> rows;
  for (auto& row : j.at("matrix")) {
    std::vector<Int> r;
    for (auto& x : row) {
      if (!x.is_number_integer()) throw InputError(path + ": matrix entries must be integers");
      r.emplace_back(x.get<long>());
    }
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

IntPoly parse_poly(const std::string& s) {
  std::vector<Int> c;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      c.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw InputError("bad coefficient '" + tok + "'");
    }
  }
  return IntPoly(c);
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
  return a;
}

json group_json(const AbelianGroup& g) {
  json a = json::array();
  for (auto& d : g.invariant_factors) a.push_back(d.fits_slong_p() ? json(d.get_si()) : json(d.get_str()));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ckit: knot concordance invariants from Seifert matrices"};
  app.require_subcommand(1);
  Output out;
  std::string knots = CKIT_DEFAULT_KNOTS, name, a, b, matrix, poly;
  bool galois = false;
  long dp = 0;
  unsigned p = 3;

  auto add_output = [&](CLI::App* s) {
    s->add_flag("--json", out.as_json, "Emit JSON");
    s->add_option("--out", out.out, "Write the report to FILE");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Genus bounds for a knot (all knots without --name)");
  analyze_cmd->add_option("--knots", knots, "Knot table JSON");
  analyze_cmd->add_option("--name", name, "Knot name; -K mirrors, K#L sums");
  analyze_cmd->add_flag("--galois", galois, "Run the 3-fold cover / Galois chain");
  add_output(analyze_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Algebraic concordance of two knots");
  compare_cmd->add_option("--knots", knots, "Knot table JSON");
  compare_cmd->add_option("--a", a, "First knot")->required();
  compare_cmd->add_option("--b", b, "Second knot")->required();
  add_output(compare_cmd);

  auto* witt_cmd = app.add_subcommand("witt", "Witt class of a symmetric integer matrix");
  witt_cmd->add_option("--matrix", matrix, "JSON file {\"matrix\": [[...]]}")->required();
  witt_cmd->add_option("--dp", dp, "Prime p for the boundary in W(Z/pZ)");
  add_output(witt_cmd);

  auto* covers_cmd = app.add_subcommand("covers", "Homology of the p-fold branched cover");
  covers_cmd->add_option("--knots", knots, "Knot table JSON");
  covers_cmd->add_option("--name", name, "Knot name")->required();
  covers_cmd->add_option("--p", p, "Cover degree (prime)");
  add_output(covers_cmd);

  auto* galois_cmd = app.add_subcommand("galois", "Galois group of an irreducible quartic");
  galois_cmd->add_option("--poly", poly, "Coefficients, lowest degree first")->default_val("1,-8,10,-8,1");
  add_output(galois_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) {
      const auto table = ingest_file(knots);
      std::vector<KnotRecord> targets;
      if (name.empty())
        targets = table;
      else
        targets.push_back(resolve_knot(table, name));
      std::string text;
      json j = json::array();
      for (auto& k : targets) {
        const GenusReport r = analyze(k, AnalyzeOptions{galois});
        text += to_text(r);
        j.push_back(to_json(r));
      }
      out.emit(text, name.empty() ? j : j[0]);
    } else if (*compare_cmd) {
      const auto table = ingest_file(knots);
      const CompareReport r = compare(resolve_knot(table, a), resolve_knot(table, b));
      out.emit(to_text(r), to_json(r));
    } else if (*witt_cmd) {
      const IntMatrix m = read_matrix(matrix);
      if (!m.is_symmetric()) throw InputError("matrix is not symmetric");
      const DiagonalForm d = diagonalize(to_rat(m));
      json j{{"diagonal", json::array()}, {"signature", d.signature()}};
      for (auto& e : d.entries) j["diagonal"].push_back(e.get_si());
      std::ostringstream os;
      if (dp != 0) {
        if (dp < 3 || !is_prime(Int(dp))) throw InputError("--dp needs an odd prime");
        const FiniteWittClass c = boundary_p(d, Int(dp));
        const bool triv = finite_trivial(c);
        os << (triv ? "trivial" : "nontrivial") << ": class " << c.str() << "\n";
        j["boundary"] = {{"p", dp}, {"entries", json::array()}, {"trivial", triv}};
        for (auto& e : c.entries) j["boundary"]["entries"].push_back(e.get_si());
      } else {
        const bool triv = trivial_over_q(d);
        os << "diagonal " << d.str() << ", signature " << d.signature() << ", "
           << (triv ? "trivial" : "nontrivial") << " in W(Q)\n";
        j["trivial_over_q"] = triv;
      }
      out.emit(os.str(), j);
    } else if (*covers_cmd) {
      const KnotRecord k = resolve_knot(ingest_file(knots), name);
      const Int order = cover_order(alexander(k.seifert), p);
      const AbelianGroup g = cover_homology(k.seifert, p);
      std::ostringstream os;
      os << "H_1 of the " << p << "-fold branched cover of " << k.name << ": " << g.str() << " (order "
         << order.get_str() << (g.is_doubled() ? ", of the form T + T" : "") << ")\n";
      json j{{"name", k.name}, {"p", p}, {"order", order.get_str()}, {"invariant_factors", group_json(g)},
             {"doubled", g.is_doubled()}};
      out.emit(os.str(), j);
    } else if (*galois_cmd) {
      const IntPoly q = parse_poly(poly);
      const QuarticGalois g = quartic_galois(q);
      const bool obstructed = !is_abelian(g);
      std::ostringstream os;
      os << q.str() << ": Galois group " << to_string(g) << " (order " << group_order(g) << "); "
         << (obstructed ? "obstructed: splitting field embeds in no 2-power cyclotomic field"
                        : "no obstruction from this test")
         << "\n";
      json j{{"poly", poly_json(q)}, {"group", to_string(g)}, {"obstructed", obstructed}};
      out.emit(os.str(), j);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
