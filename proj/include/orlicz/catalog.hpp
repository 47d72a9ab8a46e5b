#pragma once

#include <string>
#include <vector>

#include "orlicz/young.hpp"

namespace orlicz::catalog {

YoungFunction power(double p, double c = 1.0);               // c u^p
YoungFunction zero_inf_step(double b = 1.0);                 // 0 on [0,b], inf beyond
YoungFunction positive_part(double s = 1.0, double m = 1.0); // m (u - s)_+
YoungFunction expm1(double k = 1.0, double c = 1.0);         // c (e^{ku} - 1)
YoungFunction exp_square();                                  // e^{u^2} - 1
YoungFunction square_log();                                  // u^2 log(1+u)
YoungFunction pole(double b = 1.0, double p = 1.0, double c = 1.0);  // c (u/(b-u))^p, class Y2
YoungFunction linear_cap(double b = 2.0);                    // u on [0,b], inf beyond, class Y3
YoungFunction shifted_cap(double s, double b);               // (u-s)_+ on [0,b], inf beyond

YoungFunction example7_phi();   // max(u-1, 0)
YoungFunction example7_phi2();  // 0 on [0,2], u^2/4 - 1 beyond
YoungFunction example7_phi3();  // 0 on [0,1/2], 2u-1 on [1/2,1], u^2 beyond
YoungFunction example11_phi_p(double p);  // u^p on [0,1], u^4 beyond
YoungFunction example11_theta();          // 0 on [0,1], u^2-1 on [1,sqrt2], u^4/4 beyond
YoungFunction example9_psi(int pieces = 8);

// Shorthand such as "power:2:0.5", "step:1", "example9_psi:8", inline JSON
// starting with '{', or "@path" to a descriptor file.
YoungFunction parse(const std::string& spec);

// Names accepted by parse(), for --help output.
std::vector<std::string> shorthand_names();

}  // namespace orlicz::catalog
