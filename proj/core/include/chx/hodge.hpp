#pragma once

#include <string>
#include <vector>

// Hodge diamonds as plain integer grids, with the consistency checks and
// the two signature counts the comparison pipelines need.

namespace chx {

class HodgeDiamond {
  public:
    HodgeDiamond() = default;
    explicit HodgeDiamond(int dim);

    // rows[p][q] = h^{p,q}; the grid must be (dim+1) x (dim+1).
    [[nodiscard]] static HodgeDiamond from_rows(const std::vector<std::vector<int>>& rows);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int hodge(int p, int q) const;
    void set(int p, int q, int value);

    // Violations of the diamond axioms, as human-readable strings:
    // conjugation symmetry h^{p,q} = h^{q,p}, Serre duality
    // h^{p,q} = h^{n-p,n-q}, h^{0,0} = 1, and non-negativity.
    [[nodiscard]] std::vector<std::string> validate() const;

    [[nodiscard]] std::vector<int> betti() const;  // b_0 .. b_{2n}
    [[nodiscard]] int betti_number(int k) const;
    [[nodiscard]] int euler() const;

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return h_; }

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

  private:
    int dim_ = 0;
    std::vector<std::vector<int>> h_;
};

// Signature of a compact Kaehler manifold of even complex dimension, by the
// Hodge-theoretic count over the full diamond: sum (-1)^q h^{p,q}.
[[nodiscard]] int signature_from_hodge(const HodgeDiamond& d);

// Dimension-4 variant kept for replaying recorded signature tables whose
// middle-cohomology count carries a constant +4; it returns
// signature_from_hodge + 4.  The offset is constant, so any equation
// comparing two spaces through a common evaluator is unaffected by which
// of the two counts both sides use.
[[nodiscard]] int signature_from_hodge_legacy(const HodgeDiamond& d);

// chi(O) = sum (-1)^q h^{0,q}.
[[nodiscard]] int chi_structure_sheaf(const HodgeDiamond& d);

}  // namespace chx
