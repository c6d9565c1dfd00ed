#include "chx/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace chx {

namespace {

void validate(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

int Partition::part(int i) const {
    if (i < 0) {
        throw std::out_of_range("negative partition row");
    }
    return i < rows() ? parts_[i] : 0;
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) {
        w += p;
    }
    return w;
}

bool Partition::fits_in_box(int max_rows, int max_cols) const {
    return rows() <= max_rows && (parts_.empty() || parts_[0] <= max_cols);
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.rows(); ++i) {
        if (part(i) < inner.part(i)) {
            return false;
        }
    }
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int col = 0; parts_.size() > 0 && col < parts_[0]; ++col) {
        int height = 0;
        while (height < rows() && parts_[height] > col) {
            ++height;
        }
        out.push_back(height);
    }
    return Partition(std::move(out));
}

Partition Partition::complement(int max_rows, int max_cols) const {
    if (!fits_in_box(max_rows, max_cols)) {
        throw std::invalid_argument("partition " + to_string() + " does not fit in a " +
                                    std::to_string(max_rows) + "x" + std::to_string(max_cols) +
                                    " box");
    }
    std::vector<int> out;
    for (int i = max_rows - 1; i >= 0; --i) {
        const int p = max_cols - part(i);
        if (p > 0) {
            out.push_back(p);
        }
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return a.parts_ < b.parts_;
}

bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

std::vector<Partition> Partition::all_of_weight(int weight) {
    return all_in_box(weight, weight, weight);
}

std::vector<Partition> Partition::all_in_box(int max_rows, int max_cols, int weight) {
    std::vector<Partition> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    if (weight < 0 || max_rows <= 0 || max_cols <= 0) {
        return out;
    }
    std::vector<int> current;
    const auto descend = [&](auto&& self, int remaining, int max_part, int rows_left) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (rows_left == 0) {
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p, rows_left - 1);
            current.pop_back();
        }
    };
    descend(descend, weight, max_cols, max_rows);
    std::sort(out.begin(), out.end());
    return out;
}

Int lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
    if (!outer.contains(inner) || outer.weight() != inner.weight() + content.weight()) {
        return Int(0);
    }
    if (outer.weight() == inner.weight()) {
        return Int(1);
    }

    // Skew cells in reading order: rows top to bottom, right to left inside
    // a row, so the lattice-word condition can be checked as cells fill.
    struct Cell {
        int row;
        int col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < outer.rows(); ++r) {
        for (int c = outer.part(r) - 1; c >= inner.part(r); --c) {
            cells.push_back({r, c});
        }
    }

    const int values = content.rows();
    std::vector<std::vector<int>> fill(outer.rows(), std::vector<int>(outer.part(0), 0));
    std::vector<int> used(values + 1, 0);
    Int count(0);

    const auto place = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            ++count;
            return;
        }
        const auto [row, col] = cells[at];
        const bool has_right = col + 1 < outer.part(row);
        const bool has_above = row > 0 && col < outer.part(row - 1) && col >= inner.part(row - 1);
        for (int v = 1; v <= values; ++v) {
            if (used[v] == content.part(v - 1)) {
                continue;  // content exhausted
            }
            if (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;  // lattice word violated
            }
            if (has_right && v > fill[row][col + 1]) {
                continue;  // row must weakly increase rightwards
            }
            if (has_above && v <= fill[row - 1][col]) {
                continue;  // column must strictly increase downwards
            }
            fill[row][col] = v;
            ++used[v];
            self(self, at + 1);
            --used[v];
            fill[row][col] = 0;
        }
    };
    place(place, 0);
    return count;
}

}  // namespace chx
