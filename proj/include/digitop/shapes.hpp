#pragma once

#include <optional>
#include <string>
#include <utility>

#include "digitop/image.hpp"

namespace digitop {
namespace shapes {

// All generators are deterministic and produce c_1-connected sets.
// u only sets the adjacency parameter of the returned image.

// Q = [0,n]^2, (n+1)^2 points.
DigitalImage full_square(int n, int u = 1);

// The serpentine subset of Q: Q minus the columns {4k+1} x [1,n] and
// {4k+3} x [0,n-1] that fall inside the square. Requires n even, n >= 2.
DigitalImage square_snake(int n, int u = 1);

// A = [0,n] x [0,2].
DigitalImage rect_bar(int n, int u = 1);

// B = A minus the bar [1,n] x {1}.
DigitalImage c_bar(int n, int u = 1);

// C = [0,n] x {0}.
DigitalImage baseline(int n, int u = 1);

// X = boundary of [-n,n]^2: points with |x| = n or |y| = n, 8n of them.
DigitalImage square_annulus(int n, int u = 1);

// Y = X minus the corner (n,n).
DigitalImage punctured_annulus(int n, int u = 1);

// The paired constructions of the worked examples.
std::pair<DigitalImage, DigitalImage> rect_and_c(int n, int u = 1);          // (A, B)
std::pair<DigitalImage, DigitalImage> annulus_pair(int n, int u = 1);        // (X, Y)

enum class Family {
    FullSquare,
    SquareSnake,
    RectBar,
    CBar,
    Baseline,
    SquareAnnulus,
    PuncturedAnnulus,
};

// CLI names: full-square, square-snake, rect-bar, c-bar, baseline,
// square-annulus, punctured-annulus.
std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

DigitalImage make(Family f, int n, int u = 1);

}  // namespace shapes
}  // namespace digitop
