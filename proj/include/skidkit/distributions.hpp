#pragma once

namespace skidkit {

// Which side of a test/interval a probability refers to.
enum class Tail {
    Lower,
    Upper,
    TwoSided,
};

// Natural log of the gamma function, x > 0.
// Absolute error <= 1e-10 on [0.5, 200].
double ln_gamma(double x);

// Regularized incomplete beta I_x(a,b), 0 <= x <= 1, a,b > 0.
// Continued-fraction evaluation, absolute error <= 1e-10.
double beta_inc_reg(double x, double a, double b);

// Student's t distribution with df > 0 degrees of freedom.
double t_cdf(double t, double df);
double t_quantile(double p, double df);  // p in (0,1); t_quantile(0.5,df)==0

// Fisher's F distribution with df1, df2 > 0 degrees of freedom.
double f_cdf(double f, double df1, double df2);
// Upper-alpha critical value: f_cdf(result, df1, df2) == 1 - alpha.
double f_critical(double alpha, double df1, double df2);

}  // namespace skidkit
