#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanocascade/polygon.hpp"
#include "fanocascade/scaffolding.hpp"
#include "fanocascade/singularity.hpp"

namespace fano {

/// One deformation family of del Pezzo surfaces carrying a single 1/k(1,1)
/// singularity (ids "X:k:l" and "B:k") or a pair of such singularities
/// (ids "pair:k1:k2"). X:k:0 is the weighted projective plane P(1,1,k),
/// X:k:l its blow-up in l general points, B:k the surface obtained from
/// X:k:(k+1) by contracting the curve through the blown-up points.
struct FamilyRecord {
    std::string id;
    long k{0};
    long k2{0};  ///< second singularity index, pair families only
    long l{-1};  ///< number of blown-up points, X families only
    std::optional<LatticePolygon> polygon;  ///< toric degeneration, when recorded
    Rat degree;                             ///< anti-canonical self intersection
    long fano_index{1};
    bool toric{false};
    SingularityContent content;  ///< of the polygon, or of the surface when no polygon
    /// Ambient presentation: one weight row for a weighted projective space,
    /// two rows for the rank two quotients. equation_degrees lists the
    /// multidegrees of the defining equations of the general member.
    std::optional<GitData> model;
    std::vector<std::string> equations;  ///< binomials cutting out the toric member
    std::optional<bool> quasismooth;     ///< verdict for weighted projective models
    std::optional<Scaffolding> scaffolding;  ///< produces `model` under laurent_invert
    /// Degree rows of the alternative Pfaffian presentation, when one exists.
    std::vector<std::vector<long>> pfaffian_degree_rows;
    std::vector<std::string> notes;
};

/// Polygon of the toric degeneration of X:k:l. Closed formulas exist for
/// 0 <= l <= k+1 (a quadrilateral under the scroll embedding) and for
/// l = k+2, k+3, k+4 split by the parity of k; there is no recorded polygon
/// for any other l, and OutOfRange is thrown.
LatticePolygon polygon_X(long k, long l);

/// The triangle conv{(1,0),(-1,-1),(-1,k)} degenerating B:k.
LatticePolygon polygon_B(long k);

/// The triangle conv{(1,0),(-1,-k1),(-1,k2)} with residual singularities
/// 1/k1(1,1) and 1/k2(1,1), degenerating the degree (k1+k2) hypersurface in
/// P(1,1,k1,k2).
LatticePolygon polygon_pair(long k1, long k2);

/// Number of families in the cascade over P(1,1,k): the plane itself, its
/// blow-ups in 1..k+4 points and one contraction, so k+6. Throws OutOfRange
/// for k <= 3 where the count is not uniform.
long cascade_size(long k);

/// Fully populated record for a catalog id; throws UnknownId otherwise.
FamilyRecord family_record(const std::string& id);

/// Every catalog id: X:k:l for k = 3..10, l = 0..k+4, the extra family
/// X:3:8, B:k for k = 3..10, and five pair families.
std::vector<std::string> all_family_ids();

/// Outcome of regenerating one reference table against its golden file.
struct TableReport {
    std::string table;   ///< golden file name
    bool matched{false}; ///< emitted text equals the golden file
    std::string text;    ///< full emitted table
    /// Rows whose verdict column is MISMATCH: documented disagreements
    /// between a stored closed form and the computed value.
    std::vector<std::string> discrepancies;
};

/// Recomputes every reference table (cascade overview, series models, weight
/// matrices, root counts and types, lattice indices, quiver node counts and
/// the pair models) and diffs each against golden_dir/<table>. When write is
/// set the files are rewritten first.
std::vector<TableReport> regenerate_tables(const std::string& golden_dir, bool write = false);

}  // namespace fano
