#include "ckit/engine.hpp"

#include <algorithm>
#include <sstream>

namespace ckit {

std::string to_string(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::signature_jump: return "signature-jump";
    case ObstructionReason::witt_boundary: return "witt-boundary";
    case ObstructionReason::odd_exponent: return "odd-exponent";
    case ObstructionReason::galois_cyclotomic: return "galois-cyclotomic";
  }
  return "?";
}

namespace {

const AbelianGroup kValidatedTorsion{{8, 8}};

AbelianGroup two_primary(const AbelianGroup& g) {
  AbelianGroup t;
  for (auto& d : g.invariant_factors) {
    const long v = valuation(d, Int(2));
    if (v > 0) t.invariant_factors.push_back(pow_int(Int(2), static_cast<unsigned long>(v)));
  }
  return t;
}

bool is_obstructed(const std::vector<Obstruction>& obs, const IntPoly& d) {
  return std::any_of(obs.begin(), obs.end(), [&](const Obstruction& o) { return o.delta == d; });
}

GaloisChain galois_chain(const KnotRecord& k, const SymmetricFactorization& fz) {
  GaloisChain g;
  const SymmetricFactor* quartic = nullptr;
  for (auto& f : fz.factors)
    if (f.symmetric && f.poly.degree() == 4 && f.exponent % 2 == 1) quartic = &f;
  if (!quartic) {
    g.note = "no odd-exponent quartic symmetric factor";
    return g;
  }
  g.applicable = true;
  g.quartic = quartic->poly;
  try {
    g.cover3 = cover_homology(k.seifert, 3);
  } catch (const InputError& e) {
    g.note = std::string("3-fold cover: ") + e.what();
    return g;
  }
  if (!(two_primary(*g.cover3) == kValidatedTorsion)) {
    g.note = "Casson-Gordon chain not validated for this shape (2-torsion " + two_primary(*g.cover3).str() + ")";
    return g;
  }
  g.character_search_ok = character_search(AbelianGroup{{8, 8, 2, 2}}, 2, 16).ok();
  if (!g.character_search_ok) {
    g.note = "character search failed";
    return g;
  }
  g.n3 = twisted_poly_trivial_char(g.quartic, 3);
  try {
    g.group = quartic_galois(*g.n3);
  } catch (const InputError&) {
    g.note = "N_3 of the quartic is not an irreducible quartic; chain not validated for this shape";
    return g;
  }
  if (is_abelian(*g.group)) {
    g.note = "Galois group of N_3 is abelian; no obstruction from this test";
    return g;
  }
  g.fired = true;
  g.note = "N_3 splitting field has group " + to_string(*g.group) + ", which embeds in no 2-power cyclotomic field";
  return g;
}

}  // namespace

GenusReport analyze(const KnotRecord& k, const AnalyzeOptions& opts) {
  GenusReport r;
  r.name = k.name;
  r.alexander = alexander(k.seifert);
  const SymmetricFactorization fz = factor_rational(r.alexander);
  for (auto& f : fz.factors) r.factors.push_back({f.poly, f.exponent, f.symmetric});
  r.signature = signature(k.seifert);
  r.g3_lower = (r.alexander.degree() + 1) / 2;
  r.g3 = k.genus3;
  r.g4_upper = k.g4_upper;

  const SignatureProfile prof = signature_profile(k.seifert);
  r.g4_lower = (prof.max_abs() + 1) / 2;
  for (auto& j : prof.jumps) {
    if (j.jump == 0 || is_obstructed(r.obstructed, j.delta)) continue;
    r.obstructed.push_back({j.delta, ObstructionReason::signature_jump,
                            "jump " + std::to_string(j.jump) + " at the unit root of " + j.delta.str()});
  }

  const Decomposition dec = decompose(isometric_structure(invertible_representative(k.seifert)));
  for (auto& c : dec.components) {
    ComponentSummary cs{c.delta, c.exponent, c.structure.dim(), component_trivial(c)};
    if (cs.verdict.value == Verdict::undetermined)
      r.notes.push_back("bound not improved; undetermined at " + c.delta.str() + ": " + cs.verdict.witness);
    if (cs.verdict.nontrivial() && !is_obstructed(r.obstructed, c.delta)) {
      ObstructionReason why = ObstructionReason::witt_boundary;
      if (cs.verdict.witness.rfind("real place", 0) == 0)
        why = ObstructionReason::signature_jump;
      else if (c.exponent % 2 == 1)
        why = ObstructionReason::odd_exponent;
      if (fz.find(c.delta))
        r.obstructed.push_back({c.delta, why, cs.verdict.witness});
      else
        r.notes.push_back("nontrivial component " + c.delta.str() + " does not divide the Alexander polynomial");
    }
    r.components.push_back(std::move(cs));
  }
  for (auto& o : r.obstructed) CKIT_ASSERT(fz.find(o.delta) != nullptr, "obstructed factor does not divide Delta");

  std::vector<IntPoly> forced;
  for (auto& o : r.obstructed) forced.push_back(o.delta);
  const long mcd = min_concordant_degree(r.alexander, forced);
  CKIT_ASSERT(mcd <= r.alexander.degree(), "min_concordant_degree exceeds deg Delta");
  r.gc_lower = mcd / 2;

  if (opts.galois) {
    GaloisChain g = galois_chain(k, fz);
    if (g.fired) {
      for (auto& f : fz.factors)
        if (f.symmetric && f.poly != g.quartic && !is_obstructed(r.obstructed, f.poly))
          r.obstructed.push_back({f.poly, ObstructionReason::galois_cyclotomic, g.note});
      r.gc_lower = std::max(r.gc_lower, r.alexander.degree() / 2);
    } else {
      r.notes.push_back("galois: " + g.note);
    }
    r.galois = std::move(g);
  }
  std::sort(r.obstructed.begin(), r.obstructed.end(),
            [](const Obstruction& a, const Obstruction& b) { return a.delta < b.delta; });

  if (r.g3) r.gc_upper = r.g3;
  if (r.g4_upper && *r.g4_upper == 0 && r.gc_lower != 0)
    r.notes.push_back("table g4 = 0 but gc_lower = " + std::to_string(r.gc_lower));
  if (r.g3 && r.gc_lower > *r.g3) r.notes.push_back("gc_lower exceeds table g3");
  return r;
}

CompareReport compare(const KnotRecord& a, const KnotRecord& b) {
  return {a.name, b.name, alg_concordant(a.seifert, b.seifert)};
}

namespace {

std::string trim(const std::string& s) {
  const auto lo = s.find_first_not_of(" \t");
  if (lo == std::string::npos) return "";
  const auto hi = s.find_last_not_of(" \t");
  return s.substr(lo, hi - lo + 1);
}

KnotRecord resolve_term(const std::vector<KnotRecord>& table, const std::string& term) {
  std::string base = trim(term);
  bool mirrored = false;
  while (!base.empty() && base.front() == '-') {
    mirrored = !mirrored;
    base = trim(base.substr(1));
  }
  for (auto& k : table)
    if (k.name == base) {
      if (!mirrored) return k;
      KnotRecord m = k;
      m.name = "-" + k.name;
      m.seifert = mirror(k.seifert);
      return m;
    }
  std::string known;
  for (auto& k : table) known += (known.empty() ? "" : ", ") + k.name;
  throw InputError("unknown knot '" + base + "'; known: " + known);
}

}  // namespace

KnotRecord resolve_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t hash; (hash = name.find('#', start)) != std::string::npos; start = hash + 1)
    terms.push_back(name.substr(start, hash - start));
  terms.push_back(name.substr(start));
  for (auto& t : terms)
    if (trim(t).empty()) throw InputError("empty term in knot name '" + name + "'");
  KnotRecord r = resolve_term(table, terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const KnotRecord k = resolve_term(table, terms[i]);
    r.name += "#" + k.name;
    r.seifert = connected_sum(r.seifert, k.seifert);
    r.genus3 = r.genus3 && k.genus3 ? std::optional<long>(*r.genus3 + *k.genus3) : std::nullopt;
    r.g4_upper = r.g4_upper && k.g4_upper ? std::optional<long>(*r.g4_upper + *k.g4_upper) : std::nullopt;
    r.notes.clear();
  }
  return r;
}

namespace {

using nlohmann::json;

json int_json(const Int& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(int_json(c));
  return a;
}

template <typename T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json tri_json(const TriState& t) { return json{{"verdict", to_string(t.value)}, {"witness", t.witness}}; }

}  // namespace

nlohmann::json to_json(const GenusReport& r) {
  json j;
  j["name"] = r.name;
  j["alexander"] = poly_json(r.alexander);
  j["factors"] = json::array();
  for (auto& f : r.factors)
    j["factors"].push_back({{"poly", poly_json(f.poly)}, {"exponent", f.exponent}, {"symmetric", f.symmetric}});
  j["signature"] = r.signature;
  j["g3_lower"] = r.g3_lower;
  j["g3"] = opt_json(r.g3);
  j["g4_lower"] = r.g4_lower;
  j["g4_upper"] = opt_json(r.g4_upper);
  j["gc_lower"] = r.gc_lower;
  j["gc_upper"] = opt_json(r.gc_upper);
  j["components"] = json::array();
  for (auto& c : r.components)
    j["components"].push_back(
        {{"delta", poly_json(c.delta)}, {"exponent", c.exponent}, {"dim", c.dim}, {"class", tri_json(c.verdict)}});
  j["obstructed"] = json::array();
  for (auto& o : r.obstructed)
    j["obstructed"].push_back(
        {{"delta", poly_json(o.delta)}, {"reason", to_string(o.reason)}, {"certificate", o.certificate}});
  if (r.galois) {
    const GaloisChain& g = *r.galois;
    json gj;
    gj["applicable"] = g.applicable;
    gj["fired"] = g.fired;
    gj["quartic"] = g.applicable ? poly_json(g.quartic) : json(nullptr);
    if (g.cover3) {
      json f = json::array();
      for (auto& d : g.cover3->invariant_factors) f.push_back(int_json(d));
      gj["cover3"] = f;
    } else {
      gj["cover3"] = nullptr;
    }
    gj["character_search_ok"] = g.character_search_ok;
    gj["n3"] = g.n3 ? poly_json(*g.n3) : json(nullptr);
    gj["group"] = g.group ? json(to_string(*g.group)) : json(nullptr);
    gj["note"] = g.note;
    j["galois"] = gj;
  } else {
    j["galois"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const CompareReport& r) {
  return json{{"a", r.a}, {"b", r.b}, {"result", tri_json(r.verdict)}};
}

namespace {

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "?"; }

}  // namespace

std::string to_text(const GenusReport& r) {
  std::ostringstream os;
  os << "knot " << r.name << "\n";
  os << "  alexander: " << r.alexander.str() << "\n";
  os << "  factors:";
  for (auto& f : r.factors)
    os << " (" << f.poly.str() << ")^" << f.exponent << (f.symmetric ? "" : " [paired]");
  os << "\n";
  os << "  signature: " << r.signature << "\n";
  os << "  g3: lower " << r.g3_lower << ", table " << opt_str(r.g3) << "\n";
  os << "  g4: lower " << r.g4_lower << ", table upper " << opt_str(r.g4_upper) << "\n";
  os << "  gc: lower " << r.gc_lower << ", upper " << opt_str(r.gc_upper) << "\n";
  if (!r.components.empty()) {
    os << "  components:\n";
    for (auto& c : r.components)
      os << "    " << c.delta.str() << " (exponent " << c.exponent << ", dim " << c.dim
         << "): " << to_string(c.verdict.value) << "; " << c.verdict.witness << "\n";
  }
  if (!r.obstructed.empty()) {
    os << "  obstructed:\n";
    for (auto& o : r.obstructed)
      os << "    " << o.delta.str() << ": " << to_string(o.reason) << " (" << o.certificate << ")\n";
  }
  if (r.galois && r.galois->fired) os << "  galois: " << r.galois->note << "\n";
  for (auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string to_text(const CompareReport& r) {
  std::ostringstream os;
  os << r.a << " vs " << r.b << ": ";
  switch (r.verdict.value) {
    case Verdict::trivial: os << "algebraically concordant"; break;
    case Verdict::nontrivial: os << "not algebraically concordant"; break;
    case Verdict::undetermined: os << "undetermined"; break;
  }
  if (!r.verdict.witness.empty()) os << " (" << r.verdict.witness << ")";
  os << "\n";
  return os.str();
}

}  // namespace ckit
