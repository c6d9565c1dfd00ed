#include "chx/hodge.hpp"

#include <stdexcept>
#include <utility>

namespace chx {

namespace {

std::string cell(int p, int q) {
    return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

}  // namespace

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
    if (dim < 0) {
        throw std::invalid_argument("negative dimension");
    }
    h_.assign(dim + 1, std::vector<int>(dim + 1, 0));
}

HodgeDiamond HodgeDiamond::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("empty Hodge grid");
    }
    HodgeDiamond d(static_cast<int>(rows.size()) - 1);
    for (std::size_t p = 0; p < rows.size(); ++p) {
        if (rows[p].size() != rows.size()) {
            throw std::invalid_argument("Hodge grid row " + std::to_string(p) + " has " +
                                        std::to_string(rows[p].size()) + " entries, expected " +
                                        std::to_string(rows.size()));
        }
    }
    d.h_ = rows;
    return d;
}

int HodgeDiamond::hodge(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) {
        throw std::out_of_range(cell(p, q) + " outside a " + std::to_string(dim_) +
                                "-dimensional diamond");
    }
    return h_[p][q];
}

void HodgeDiamond::set(int p, int q, int value) {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) {
        throw std::out_of_range(cell(p, q) + " outside a " + std::to_string(dim_) +
                                "-dimensional diamond");
    }
    h_[p][q] = value;
}

std::vector<std::string> HodgeDiamond::validate() const {
    std::vector<std::string> problems;
    if (h_[0][0] != 1) {
        problems.push_back(cell(0, 0) + " = " + std::to_string(h_[0][0]) + ", expected 1");
    }
    for (int p = 0; p <= dim_; ++p) {
        for (int q = 0; q <= dim_; ++q) {
            if (h_[p][q] < 0) {
                problems.push_back(cell(p, q) + " = " + std::to_string(h_[p][q]) +
                                   " is negative");
            }
            if (p < q && h_[p][q] != h_[q][p]) {
                problems.push_back(cell(p, q) + " = " + std::to_string(h_[p][q]) +
                                   " breaks conjugation symmetry against " + cell(q, p) + " = " +
                                   std::to_string(h_[q][p]));
            }
            const int sp = dim_ - p;
            const int sq = dim_ - q;
            if (std::make_pair(p, q) < std::make_pair(sp, sq) && h_[p][q] != h_[sp][sq]) {
                problems.push_back(cell(p, q) + " = " + std::to_string(h_[p][q]) +
                                   " breaks Serre duality against " + cell(sp, sq) + " = " +
                                   std::to_string(h_[sp][sq]));
            }
        }
    }
    return problems;
}

std::vector<int> HodgeDiamond::betti() const {
    std::vector<int> b(2 * dim_ + 1, 0);
    for (int p = 0; p <= dim_; ++p) {
        for (int q = 0; q <= dim_; ++q) {
            b[p + q] += h_[p][q];
        }
    }
    return b;
}

int HodgeDiamond::betti_number(int k) const {
    if (k < 0 || k > 2 * dim_) {
        return 0;
    }
    return betti()[k];
}

int HodgeDiamond::euler() const {
    int acc = 0;
    const std::vector<int> b = betti();
    for (int k = 0; k <= 2 * dim_; ++k) {
        acc += (k % 2 == 0) ? b[k] : -b[k];
    }
    return acc;
}

int signature_from_hodge(const HodgeDiamond& d) {
    if (d.dim() % 2 != 0) {
        throw std::invalid_argument("signature needs even complex dimension, got " +
                                    std::to_string(d.dim()));
    }
    int acc = 0;
    for (int p = 0; p <= d.dim(); ++p) {
        for (int q = 0; q <= d.dim(); ++q) {
            acc += (q % 2 == 0) ? d.hodge(p, q) : -d.hodge(p, q);
        }
    }
    return acc;
}

int signature_from_hodge_legacy(const HodgeDiamond& d) {
    if (d.dim() != 4) {
        throw std::invalid_argument("the legacy signature count is a dimension-4 convention, got "
                                    + std::to_string(d.dim()));
    }
    return signature_from_hodge(d) + 4;
}

int chi_structure_sheaf(const HodgeDiamond& d) {
    int acc = 0;
    for (int q = 0; q <= d.dim(); ++q) {
        acc += (q % 2 == 0) ? d.hodge(0, q) : -d.hodge(0, q);
    }
    return acc;
}

}  // namespace chx
