#include <initializer_list>

#include "cagen/bench.hpp"
#include "cagen/notation.hpp"

namespace cagen {

namespace {

struct Ref {
  const char* strategy;
  double best;
  double mean;
};

struct Row {
  const char* name;  // covering-array notation, also the lookup key
  std::initializer_list<Ref> refs;
};

// Published best/mean sizes per strategy. Entries a source does not report
// are omitted.
const Row kBuiltinRows[] = {
    // Head-to-head set.
    {"CA(2,3^13)", {{"SCA", 20, 21.45}, {"QLSCA", 17, 18.45}}},
    {"CA(2,10^5)", {{"SCA", 118, 120.10}, {"QLSCA", 117, 118.45}}},
    {"CA(3,4^6)", {{"SCA", 64, 89.95}, {"QLSCA", 64, 66.70}}},
    {"MCA(2,5^1 3^8 2^2)", {{"SCA", 21, 22.75}, {"QLSCA", 20, 21.00}}},
    {"MCA(2,6^1 5^1 4^6 3^8 2^3)", {{"SCA", 42, 45.10}, {"QLSCA", 37, 39.65}}},
    {"MCA(2,7^1 6^1 5^1 4^6 3^8 2^3)",
     {{"SCA", 51, 56.35}, {"QLSCA", 46, 51.25}}},

    // CA(2,3^k), k = 3..12.
    {"CA(2,3^3)",
     {{"PSTG", 9, 9.55},
      {"APSO", 9, 9.21},
      {"CS", 9, 9.60},
      {"SCA", 9, 9.70},
      {"QLSCA", 9, 9.67}}},
    {"CA(2,3^4)",
     {{"PSTG", 9, 10.15},
      {"DPSO", 9, 9.00},
      {"APSO", 9, 9.95},
      {"CS", 9, 10.00},
      {"SCA", 9, 9.07},
      {"QLSCA", 9, 9.00}}},
    {"CA(2,3^5)",
     {{"PSTG", 12, 13.81},
      {"DPSO", 11, 11.53},
      {"APSO", 11, 12.23},
      {"CS", 11, 11.80},
      {"SCA", 11, 11.93},
      {"QLSCA", 11, 11.06}}},
    {"CA(2,3^6)",
     {{"PSTG", 13, 15.11},
      {"DPSO", 14, 14.50},
      {"APSO", 12, 13.78},
      {"CS", 13, 14.20},
      {"SCA", 13, 14.10},
      {"QLSCA", 14, 14.27}}},
    {"CA(2,3^7)",
     {{"PSTG", 15, 16.94},
      {"DPSO", 15, 15.17},
      {"APSO", 15, 16.62},
      {"CS", 14, 15.60},
      {"SCA", 14, 15.33},
      {"QLSCA", 14, 15.10}}},
    {"CA(2,3^8)",
     {{"PSTG", 15, 17.57},
      {"DPSO", 15, 16.00},
      {"APSO", 15, 16.92},
      {"CS", 15, 15.80},
      // Source prints "5", inconsistent with its own mean column and the
      // neighbouring rows; 15 is the only plausible reading.
      {"SCA", 15, 16.33},
      {"QLSCA", 15, 15.77}}},
    {"CA(2,3^9)",
     {{"PSTG", 17, 19.38},
      {"DPSO", 15, 16.43},
      {"APSO", 16, 18.31},
      {"CS", 16, 17.20},
      {"SCA", 16, 17.78},
      // Source prints "5"; same correction as the k=8 row.
      {"QLSCA", 15, 16.27}}},
    {"CA(2,3^10)",
     {{"PSTG", 17, 19.78},
      {"DPSO", 16, 17.30},
      {"APSO", 17, 18.12},
      {"CS", 17, 17.80},
      {"SCA", 18, 18.60},
      {"QLSCA", 15, 16.97}}},
    {"CA(2,3^11)",
     {{"PSTG", 17, 20.16},
      {"DPSO", 17, 17.70},
      {"CS", 18, 18.60},
      {"SCA", 18, 19.80},
      {"QLSCA", 16, 17.70}}},
    {"CA(2,3^12)",
     {{"PSTG", 18, 21.34},
      {"DPSO", 16, 17.93},
      {"CS", 18, 18.80},
      {"SCA", 19, 20.33},
      {"QLSCA", 16, 17.87}}},

    // CA(3,3^k), k = 4..12.
    {"CA(3,3^4)",
     {{"PSTG", 27, 29.30},
      {"APSO", 27, 28.90},
      {"CS", 28, 29.00},
      {"SCA", 27, 29.57},
      {"QLSCA", 27, 29.70}}},
    {"CA(3,3^5)",
     {{"PSTG", 39, 41.37},
      {"DPSO", 41, 43.17},
      {"APSO", 41, 42.20},
      {"CS", 38, 39.20},
      {"SCA", 39, 42.43},
      {"QLSCA", 39, 41.90}}},
    {"CA(3,3^6)",
     {{"PSTG", 45, 46.76},
      {"DPSO", 33, 38.30},
      {"APSO", 45, 46.51},
      {"CS", 43, 44.20},
      {"SCA", 33, 40.47},
      {"QLSCA", 33, 37.57}}},
    {"CA(3,3^7)",
     {{"PSTG", 50, 52.20},
      {"DPSO", 48, 50.43},
      {"APSO", 48, 51.12},
      {"CS", 48, 50.40},
      {"SCA", 50, 51.30},
      {"QLSCA", 49, 50.30}}},
    {"CA(3,3^8)",
     {{"PSTG", 54, 56.76},
      {"DPSO", 52, 53.83},
      {"APSO", 50, 54.86},
      {"CS", 53, 54.80},
      {"SCA", 54, 56.57},
      {"QLSCA", 52, 53.43}}},
    {"CA(3,3^9)",
     {{"PSTG", 58, 60.30},
      {"DPSO", 56, 57.77},
      {"APSO", 59, 60.21},
      {"CS", 58, 59.80},
      {"SCA", 59, 62.63},
      {"QLSCA", 56, 56.60}}},
    {"CA(3,3^10)",
     {{"PSTG", 62, 63.95},
      {"DPSO", 59, 60.87},
      {"APSO", 63, 64.33},
      {"CS", 62, 63.60},
      {"SCA", 64, 68.30},
      {"QLSCA", 59, 60.63}}},
    {"CA(3,3^11)",
     {{"PSTG", 64, 65.68},
      {"DPSO", 63, 63.97},
      {"CS", 66, 68.20},
      {"SCA", 70, 74.20},
      {"QLSCA", 62, 63.37}}},
    {"CA(3,3^12)",
     {{"PSTG", 67, 68.23},
      {"DPSO", 65, 66.83},
      {"CS", 70, 71.80},
      {"SCA", 78, 80.73},
      {"QLSCA", 65, 66.13}}},

    // CA(4,3^k), k = 5..12.
    {"CA(4,3^5)",
     {{"PSTG", 96, 97.83},
      {"APSO", 94, 96.33},
      {"CS", 94, 95.80},
      {"SCA", 81, 87.50},
      {"QLSCA", 81, 84.63}}},
    {"CA(4,3^6)",
     {{"PSTG", 133, 135.31},
      {"DPSO", 131, 134.37},
      {"APSO", 129, 133.98},
      {"CS", 132, 134.20},
      {"SCA", 130, 133.80},
      {"QLSCA", 129, 133.77}}},
    {"CA(4,3^7)",
     {{"PSTG", 155, 158.12},
      {"DPSO", 150, 155.23},
      {"APSO", 154, 157.42},
      {"CS", 154, 156.80},
      {"SCA", 153, 156.23},
      {"QLSCA", 150, 154.13}}},
    {"CA(4,3^8)",
     {{"PSTG", 175, 176.94},
      {"DPSO", 171, 175.60},
      {"APSO", 178, 179.70},
      {"CS", 173, 174.80},
      {"SCA", 174, 179.10},
      {"QLSCA", 172, 174.67}}},
    {"CA(4,3^9)",
     {{"PSTG", 195, 198.72},
      {"DPSO", 187, 192.27},
      {"APSO", 190, 194.13},
      {"CS", 195, 197.80},
      {"SCA", 196, 202.83},
      {"QLSCA", 186, 187.63}}},
    {"CA(4,3^10)",
     {{"PSTG", 210, 212.71},
      {"DPSO", 206, 219.07},
      {"APSO", 214, 212.21},
      {"CS", 211, 212.20},
      {"SCA", 221, 228.57},
      {"QLSCA", 205, 207.73}}},
    {"CA(4,3^11)",
     {{"PSTG", 222, 226.59},
      {"DPSO", 221, 224.27},
      {"CS", 229, 231.00},
      {"SCA", 243, 253.95},
      {"QLSCA", 220, 222.40}}},
    {"CA(4,3^12)",
     {{"PSTG", 244, 248.97},
      {"DPSO", 237, 239.85},
      {"CS", 253, 255.80},
      {"SCA", 262, 277.77},
      {"QLSCA", 233, 236.77}}},

    // CA(2,v^7), v = 2..7.
    {"CA(2,2^7)",
     {{"PSTG", 6, 6.82},
      {"DPSO", 7, 7.00},
      {"APSO", 6, 6.73},
      {"CS", 6, 6.80},
      {"SCA", 7, 7.10},
      {"QLSCA", 7, 7.00}}},
    {"CA(2,3^7)",
     {{"PSTG", 15, 15.23},
      {"DPSO", 14, 15.00},
      {"APSO", 15, 15.56},
      {"CS", 15, 16.20},
      {"SCA", 15, 15.54},
      {"QLSCA", 15, 15.10}}},
    {"CA(2,4^7)",
     {{"PSTG", 26, 27.22},
      {"DPSO", 24, 25.33},
      {"APSO", 25, 26.36},
      {"CS", 25, 26.40},
      {"SCA", 25, 26.73},
      {"QLSCA", 23, 24.77}}},
    {"CA(2,5^7)",
     {{"PSTG", 37, 38.14},
      {"DPSO", 34, 35.47},
      {"APSO", 35, 37.92},
      {"CS", 37, 38.60},
      {"SCA", 39, 41.07},
      {"QLSCA", 34, 35.37}}},
    {"CA(2,6^7)",
     {{"DPSO", 47, 49.23}, {"SCA", 54, 57.30}, {"QLSCA", 48, 48.90}}},
    {"CA(2,7^7)",
     {{"DPSO", 64, 66.37}, {"SCA", 73, 75.70}, {"QLSCA", 64, 65.47}}},

    // CA(3,v^7), v = 2..7.
    {"CA(3,2^7)",
     {{"PSTG", 13, 13.61},
      {"DPSO", 15, 15.06},
      {"APSO", 15, 15.80},
      {"CS", 12, 13.80},
      {"SCA", 13, 15.47},
      {"QLSCA", 15, 15.07}}},
    {"CA(3,3^7)",
     {{"PSTG", 50, 51.75},
      {"DPSO", 49, 50.60},
      {"APSO", 48, 51.12},
      {"CS", 49, 51.60},
      {"SCA", 48, 50.93},
      {"QLSCA", 49, 50.37}}},
    {"CA(3,4^7)",
     {{"PSTG", 116, 118.13},
      {"DPSO", 112, 115.27},
      {"APSO", 118, 120.41},
      {"CS", 117, 118.40},
      {"SCA", 118, 122.03},
      {"QLSCA", 112, 115.23}}},
    {"CA(3,5^7)",
     {{"PSTG", 225, 227.21},
      {"DPSO", 216, 219.20},
      {"APSO", 239, 243.29},
      {"CS", 223, 225.40},
      {"SCA", 235, 239.50},
      {"QLSCA", 215, 218.00}}},
    {"CA(3,6^7)",
     {{"DPSO", 365, 370.57}, {"SCA", 405, 411.50}, {"QLSCA", 364, 369.53}}},
    {"CA(3,7^7)",
     {{"DPSO", 574, 577.67}, {"SCA", 637, 651.37}, {"QLSCA", 573, 577.90}}},

    // CA(4,v^7), v = 2..7.
    {"CA(4,2^7)",
     {{"PSTG", 29, 31.49},
      {"DPSO", 34, 34.00},
      {"APSO", 30, 31.34},
      {"CS", 27, 29.60},
      {"SCA", 29, 31.27},
      {"QLSCA", 31, 31.13}}},
    {"CA(4,3^7)",
     {{"PSTG", 155, 157.77},
      {"DPSO", 150, 154.73},
      {"APSO", 153, 155.20},
      {"CS", 155, 156.80},
      {"SCA", 153, 156.33},
      {"QLSCA", 149, 154.70}}},
    {"CA(4,4^7)",
     {{"PSTG", 487, 489.91},
      {"DPSO", 472, 481.53},
      {"APSO", 472, 478.90},
      {"CS", 487, 490.20},
      {"SCA", 487, 493.73},
      {"QLSCA", 477, 483.67}}},
    {"CA(4,5^7)",
     {{"PSTG", 1176, 1180.63},
      {"DPSO", 1148, 1155.63},
      {"APSO", 1162, 1169.94},
      {"CS", 1171, 1175.20},
      {"SCA", 1185, 1203.00},
      {"QLSCA", 1150, 1159.23}}},
    {"CA(4,6^7)",
     {{"DPSO", 2341, 2357.73},
      {"SCA", 2465, 2496.05},
      {"QLSCA", 2347, 2359.50}}},
    {"CA(4,7^7)",
     {{"DPSO", 4290, 4309.60},
      {"SCA", 4595, 4618.40},
      {"QLSCA", 4293, 4315.00}}},

    // CA(t,v^10), t = 2..4, v = 4..6.
    {"CA(2,4^10)",
     {{"DPSO", 28, 29.20}, {"SCA", 32, 33.17}, {"QLSCA", 28, 28.63}}},
    {"CA(2,5^10)",
     {{"PSTG", 45, 48.31},
      {"DPSO", 42, 43.67},
      {"CS", 45, 47.80},
      {"SCA", 50, 51.43},
      {"QLSCA", 41, 43.13}}},
    {"CA(2,6^10)",
     {{"DPSO", 58, 59.23}, {"SCA", 71, 73.13}, {"QLSCA", 58, 59.47}}},
    {"CA(3,4^10)",
     {{"DPSO", 141, 143.70}, {"SCA", 166, 171.77}, {"QLSCA", 140, 142.50}}},
    {"CA(3,5^10)",
     {{"PSTG", 287, 298.00},
      {"DPSO", 273, 276.20},
      {"CS", 297, 299.20},
      {"SCA", 335, 343.33},
      {"QLSCA", 273, 274.60}}},
    {"CA(3,6^10)",
     {{"DPSO", 467, 470.50}, {"SCA", 584, 596.40}, {"QLSCA", 463, 468.83}}},
    {"CA(4,4^10)",
     {{"DPSO", 664, 667.00}, {"SCA", 743, 779.25}, {"QLSCA", 657, 661.33}}},
    {"CA(4,5^10)",
     {{"PSTG", 1716, 1726.72},
      {"DPSO", 1618, 1620.80},
      {"CS", 1731, 1740.20},
      {"SCA", 1762, 1788.25},
      {"QLSCA", 1607, 1613.00}}},
    {"CA(4,6^10)",
     {{"DPSO", 3339, 3342.50},
      {"SCA", 3420, 3492.50},
      {"QLSCA", 3343, 3352.50}}},
};

}  // namespace

std::vector<BenchmarkSpec> builtin_suites() {
  std::vector<BenchmarkSpec> specs;
  specs.reserve(std::size(kBuiltinRows));
  for (const Row& row : kBuiltinRows) {
    BenchmarkSpec spec;
    spec.name = row.name;
    spec.config = parse_ca_notation(row.name);
    for (const Ref& ref : row.refs) {
      spec.reference_values[ref.strategy] = {ref.best, ref.mean};
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace cagen
