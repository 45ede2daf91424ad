// Reference values for the sin(pi x) benchmark with D = 3.6e-3 m^2/hr,
// u = 3.6e-4 m/hr and h = k = 0.2. Rows are time levels t = 0, 0.2, ..., 1;
// columns are x = 0, 0.2, ..., 1.
#pragma once

#include <array>
#include <string>

namespace golden {

using Table = std::array<std::array<double, 6>, 6>;

inline constexpr Table kFtcsTable = {{
    {0.0, 0.5878, 0.9511, 0.9511, 0.5878, 0.0},
    {0.0, 0.58361, 0.9445, 0.9446, 0.5841, 0.0},
    {0.0, 0.5794, 0.9380, 0.9377, 0.5802, 0.0},
    {0.0, 0.5752, 0.9315, 0.9313, 0.5764, 0.0},
    {0.0, 0.5711, 0.9250, 0.9250, 0.5726, 0.0},
    {0.0, 0.5670, 0.9185, 0.9187, 0.5688, 0.0},
}};

inline constexpr Table kAnalyticTable = {{
    {0.0, 0.5878, 0.9511, 0.9511, 0.5878, 0.0},
    {0.0, 0.58362, 0.94432, 0.94431, 0.58361, 0.0},
    {0.0, 0.57948, 0.9376, 0.9376, 0.57948, 0.0},
    {0.0, 0.5753, 0.93099, 0.93098, 0.5753, 0.0},
    {0.0, 0.5713, 0.9244, 0.9243, 0.5713, 0.0},
    {0.0, 0.5672, 0.91785, 0.91784, 0.56725, 0.0},
}};

// Percent errors quoted for (m, n) nodes of the tables above.
struct QuotedPercent {
    int m;
    int n;
    double percent;
    double last_digit;  // one unit of the last printed digit
};

inline constexpr std::array<QuotedPercent, 4> kQuotedPercents = {{
    {1, 1, 0.0017, 1e-4},
    {2, 3, 0.0547, 1e-4},
    {3, 3, 0.0343, 1e-4},
    {4, 4, 0.22, 1e-2},
}};

struct PollutantEntry {
    const char* name;
    double diffusivity;
    double rate;  // printed decay rate
    double alpha;
    double beta;
};

inline constexpr std::array<PollutantEntry, 4> kPollutantTable = {{
    {"NH3", 7.92e-2, 0.78088, 0.396, 0.00036},
    {"CO", 7.20e-2, 0.70989, 0.360, 0.00036},
    {"CO2", 5.40e-2, 0.53241, 0.270, 0.00036},
    {"SO2", 4.68e-2, 0.46142, 0.234, 0.00036},
}};

}  // namespace golden
