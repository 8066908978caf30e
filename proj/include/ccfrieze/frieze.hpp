#pragma once

#include <string>
#include <vector>

#include "ccfrieze/cc_map.hpp"

namespace ccfrieze {

// rho values laid out on the AR quiver as a periodic band. entry(i, w) is
// rho of the diagonal {i, i+w}; the boundary rows w = 1 and w = N-1 are the
// edges and hold 1. Indexing by start vertex and width makes the glide
// symmetry entry(i, w) == entry(i+w, N-w) a one-line identity: both sides
// name the same diagonal.
class FriezeBand {
 public:
  FriezeBand(Polygon p, std::vector<std::vector<Integer>> rows);

  Polygon polygon() const { return polygon_; }

  // i is taken cyclically (any integer); w must lie in 1..N-1.
  const Integer& entry(int i, int w) const;

  // rows[w-1][i-1] for w = 1..N-1, i = 1..N.
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

 private:
  Polygon polygon_;
  std::vector<std::vector<Integer>> rows_;
};

// Requires a complete table (one value per diagonal of the polygon).
FriezeBand build_band(const RhoTable& table);

// The diamond at (i, w) reads a = entry(i,w) on the left, d = entry(i+1,w)
// on the right, b = entry(i,w+1) above, c = entry(i+1,w-1) below; its
// determinant is ad - bc.
struct DiamondReport {
  int i = 0;
  int w = 0;
  Integer det;
  friend bool operator==(const DiamondReport&, const DiamondReport&) = default;
};

// One report per interior diamond: w = 2..N-2 outer, i = 1..N inner. The
// boundary rows take part as the all-ones neighbors at w-1 and w+1.
std::vector<DiamondReport> diamond_determinants(const FriezeBand& band);

enum class RenderFormat { Text, Json, Csv };

// Deterministic rendering of `periods` horizontal repeats of the band.
// Text imitates the interlaced half-offset layout of hand-drawn friezes;
// Json emits {"N", "rows", "determinants"} with values as decimal strings;
// Csv emits an (i, w, value) table followed by an (i, w, determinant) one.
std::string render(const FriezeBand& band, RenderFormat format, int periods);

}  // namespace ccfrieze
