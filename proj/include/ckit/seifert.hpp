#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckit/matrix.hpp"
#include "ckit/poly.hpp"
#include "ckit/structure.hpp"

namespace ckit {

/// Square integer matrix V of even size with det(V - V^t) = +-1.
struct SeifertMatrix {
  IntMatrix V;
  /// Sign of the Pfaffian of V - V^t.
  int orientation = 1;

  std::size_t size() const { return V.rows(); }
};

SeifertMatrix validate(const IntMatrix& v);

/// Mirror image: -V^t.
SeifertMatrix mirror(const SeifertMatrix& s);
/// Connected sum: block sum.
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/// Normalized det(V - t V^t).
IntPoly alexander(const SeifertMatrix& s);

/// Signature of V + V^t.
long signature(const SeifertMatrix& s);

/// omega = ((1 - s^2) + 2 s i) / (1 + s^2); `minus_one` selects omega = -1
/// (the limit s -> infinity).
struct CirclePoint {
  Rat s;
  bool minus_one = false;

  static CirclePoint at(const Rat& s) { return {s, false}; }
  static CirclePoint negative_one() { return {Rat(0), true}; }
  /// u = omega + 1/omega = 2 Re(omega).
  Rat trace() const;
};

/// Signature of (1 - omega) V + (1 - conj omega) V^t, exact over Q(i).
long lt_signature_at(const SeifertMatrix& s, const CirclePoint& w);

struct SignatureJump {
  IntPoly delta;            // irreducible symmetric factor owning the root
  Rat u_lo, u_hi;           // isolating interval for the root in u = t + 1/t
  long jump;                // value after the root minus value before (moving away from omega = 1)
};

struct SignaturePlateau {
  Rat u_lo, u_hi;           // open gap between consecutive roots, in u
  CirclePoint sample;
  long value;
};

/// Levine-Tristram signature on the upper half circle, ordered from omega = 1
/// (u = 2) to omega = -1 (u = -2).
struct SignatureProfile {
  std::vector<SignatureJump> jumps;
  std::vector<SignaturePlateau> plateaus;
  long sigma_minus_one = 0;

  long max_abs() const;
  /// Sum of |jump| over the unit roots of `delta`.
  long total_jump(const IntPoly& delta) const;
};

SignatureProfile signature_profile(const SeifertMatrix& s);

/// (V + V^t, V^{-1} V^t).  Throws InputError on singular V.
IsometricStructure isometric_structure(const SeifertMatrix& s);

/// Algebraically concordant Seifert matrix with nonzero determinant.
SeifertMatrix invertible_representative(const SeifertMatrix& s);

struct KnotRecord {
  std::string name;
  SeifertMatrix seifert;
  std::optional<long> genus3;
  std::optional<long> g4_upper;
  std::string notes;
};

std::vector<KnotRecord> ingest_text(const std::string& text, const std::string& source = "<text>");
std::vector<KnotRecord> ingest_file(const std::string& path);

}  // namespace ckit
