#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ckit/covers.hpp"
#include "ckit/isometric.hpp"
#include "ckit/poly.hpp"
#include "ckit/seifert.hpp"

namespace ckit {

struct AnalyzeOptions {
  /// Run the 3-fold cover / N_3 / Galois chain on an odd-exponent quartic factor.
  bool galois = false;
};

enum class ObstructionReason { signature_jump, witt_boundary, odd_exponent, galois_cyclotomic };

std::string to_string(ObstructionReason r);

/// A symmetric factor of Delta that must divide the Alexander polynomial of
/// every concordant knot.
struct Obstruction {
  IntPoly delta;
  ObstructionReason reason;
  std::string certificate;
};

struct FactorSummary {
  IntPoly poly;
  unsigned exponent;
  bool symmetric;
};

struct ComponentSummary {
  IntPoly delta;
  unsigned exponent;
  std::size_t dim;
  TriState verdict;
};

struct GaloisChain {
  bool applicable = false;
  bool fired = false;
  IntPoly quartic;
  std::optional<AbelianGroup> cover3;
  bool character_search_ok = false;
  std::optional<IntPoly> n3;
  std::optional<QuarticGalois> group;
  std::string note;
};

struct GenusReport {
  std::string name;
  IntPoly alexander;
  std::vector<FactorSummary> factors;
  long signature = 0;
  long g3_lower = 0;
  std::optional<long> g3;
  long g4_lower = 0;
  std::optional<long> g4_upper;
  long gc_lower = 0;
  std::optional<long> gc_upper;
  std::vector<ComponentSummary> components;
  std::vector<Obstruction> obstructed;
  std::optional<GaloisChain> galois;
  std::vector<std::string> notes;
};

GenusReport analyze(const KnotRecord& k, const AnalyzeOptions& opts = {});

struct CompareReport {
  std::string a, b;
  TriState verdict;
};

/// Algebraic concordance of a and b, decided on a + (-b).
CompareReport compare(const KnotRecord& a, const KnotRecord& b);

/// Record by name: "K" from the table, "-K" its mirror, "K#L" connected sums
/// of such terms.  Unknown names raise InputError listing the known ones.
KnotRecord resolve_knot(const std::vector<KnotRecord>& table, const std::string& name);

/// JSON with sorted keys; integers that fit in 64 bits are numbers, larger
/// ones decimal strings; polynomials are coefficient lists, lowest degree first.
nlohmann::json to_json(const GenusReport& r);
nlohmann::json to_json(const CompareReport& r);
std::string to_text(const GenusReport& r);
std::string to_text(const CompareReport& r);

}  // namespace ckit
