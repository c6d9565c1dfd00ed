#pragma once

#include "chx/rational.hpp"

#include <string>
#include <vector>

namespace chx {

// Integer partition: weakly decreasing positive parts.  Also doubles as the
// exponent multiset of a monomial in graded variables (one variable per
// part value), which is how Chern monomials like c2^2 are keyed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int part(int i) const;  // 0 beyond the last row
    [[nodiscard]] int weight() const;
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    [[nodiscard]] bool fits_in_box(int max_rows, int max_cols) const;
    [[nodiscard]] bool contains(const Partition& inner) const;
    [[nodiscard]] Partition conjugate() const;

    // Complement inside a max_rows x max_cols box, the Poincare-dual shape.
    [[nodiscard]] Partition complement(int max_rows, int max_cols) const;

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::string to_string() const;

    // Ordered by weight, then lexicographically: (1,1) < (2) < (2,1).
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b);

    [[nodiscard]] static std::vector<Partition> all_of_weight(int weight);
    [[nodiscard]] static std::vector<Partition> all_in_box(int max_rows, int max_cols,
                                                           int weight);

private:
    std::vector<int> parts_;
};

// Littlewood-Richardson coefficient c^{outer}_{inner, content}: the number
// of semistandard skew tableaux of shape outer/inner and content `content`
// whose reverse reading word is a lattice word.  Counted by direct
// backtracking over the skew cells.
[[nodiscard]] Int lr_coefficient(const Partition& outer, const Partition& inner,
                                 const Partition& content);

}  // namespace chx
