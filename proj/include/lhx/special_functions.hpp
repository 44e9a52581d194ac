#pragma once

namespace lhx {

// Truncation and representation policy shared by every series in the library.
class SeriesConfig {
public:
    SeriesConfig() = default;
    SeriesConfig(double rel_tol, int max_terms, double poisson_switch);

    double rel_tol() const noexcept { return rel_tol_; }
    int max_terms() const noexcept { return max_terms_; }
    double poisson_switch() const noexcept { return poisson_switch_; }

private:
    double rel_tol_ = 1e-14;
    int max_terms_ = 256;
    double poisson_switch_ = 1.0;
};

struct ThetaArg {
    double X;
    double Y;
};

enum class ThetaForm { automatic, direct, poisson };

// Derivative orders supported for theta(X;Y).
enum class ThetaOrder { value, dX, dY, dXY, dXX };

// theta(X;Y) = sum_n exp(-pi n^2 X) exp(2 pi i n Y).
double jacobi_theta(ThetaArg arg, const SeriesConfig& cfg = {}, ThetaForm form = ThetaForm::automatic);

// Supported (x_order, y_order): (1,0), (0,1), (1,1), (2,0).
double jacobi_theta_partial(ThetaArg arg, int x_order, int y_order, const SeriesConfig& cfg = {},
                            ThetaForm form = ThetaForm::automatic);

double jacobi_theta_order(ThetaArg arg, ThetaOrder order, const SeriesConfig& cfg = {},
                          ThetaForm form = ThetaForm::automatic);

// X-derivative of theta(X;0) minus the matching derivative of X^{-1/2}.
// On the Poisson side this drops the central image, which keeps lattice sums
// free of cancellation against the origin term.
double jacobi_theta_offcenter(double X, ThetaOrder order, const SeriesConfig& cfg = {});

// mu(X) = sum_{n>=2} n^2 exp(-pi (n^2-1) X)
double mu(double X, const SeriesConfig& cfg = {});
// nu(X) = sum_{n>=2} n^4 exp(-pi (n^2-1) X)
double nu(double X, const SeriesConfig& cfg = {});

struct Envelope {
    double lower;
    double upper;
};

// Bounds on -theta_Y(X;Y)/sin(2 pi Y).
Envelope theta_envelope(double X, const SeriesConfig& cfg = {});

}  // namespace lhx
