#pragma once

#include "schedmech/core.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace schedmech {

struct threshold_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One affine piece f(x) = slope * x + intercept with slope >= 0.
struct AffinePiece {
    ExtRat slope;
    ExtRat intercept;

    ExtRat eval(const ExtRat& x) const;
};

// Where sup{ y : f(y) < x } lands for a nondecreasing f: a finite critical
// value, or the winning set is all of R / empty (the allocation of that task
// never responds to the player's own value).
struct CriticalValue {
    enum class Kind { finite, always_wins, never_wins };
    Kind kind;
    ExtRat value;  // meaningful for Kind::finite
};

// Nondecreasing threshold function of one real variable. Exact kinds
// (constant, affine, piecewise linear) support exact evaluation and exact
// generalized inverses; the exp kind is a strictly increasing dyadic lookup
// table over a declared range and is excluded from exact-fit operations.
class ThresholdFn {
public:
    static ThresholdFn constant(ExtRat value);
    static ThresholdFn affine(ExtRat slope, ExtRat intercept);
    static ThresholdFn identity() { return affine(1, 0); }

    // pieces.size() == breakpoints.size() + 1; piece k covers
    // [breakpoints[k-1], breakpoints[k]] with unbounded end pieces.
    // Pieces must be nondecreasing and may only jump upward at breakpoints.
    static ThresholdFn piecewise(std::vector<ExtRat> breakpoints,
                                 std::vector<AffinePiece> pieces);

    // e^x tabulated at dyadic knots over [-range, range], range a positive
    // integer; values are exact rationals rounded to 2^-40 dyadics.
    static ThresholdFn exp_table(int range = 16);

    ExtRat eval(const ExtRat& x) const;

    bool exact() const { return !std::holds_alternative<ExpTable>(form_); }
    bool is_constant_fn() const;
    bool strictly_increasing() const;

    // declared safe evaluation bound (exp tables only)
    std::optional<ExtRat> probe_bound() const;

    // sup{ y : f(y) < x } for exact kinds; throws threshold_error for exp.
    CriticalValue critical_below(const ExtRat& x) const;

    std::string describe() const;

private:
    struct Constant {
        ExtRat value;
    };
    struct Affine {
        AffinePiece piece;
    };
    struct Piecewise {
        std::vector<ExtRat> breakpoints;
        std::vector<AffinePiece> pieces;
    };
    struct ExpTable {
        int range;
        std::vector<ExtRat> knots;   // strictly increasing dyadic arguments
        std::vector<ExtRat> values;  // strictly increasing positive values
    };
    using Form = std::variant<Constant, Affine, Piecewise, ExpTable>;

    explicit ThresholdFn(Form f) : form_(std::move(f)) {}

    Form form_;
};

}  // namespace schedmech
