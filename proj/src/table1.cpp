#include "shimura/table1.hpp"

#include <algorithm>
#include <iterator>

namespace shimura::table1 {

const std::vector<Row>& goldens() {
  static const std::vector<Row> rows = {
      {2, 2, {-4, -3, 0},
       {-12, -8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 4},
       {2, 3, 5, 7}},
      {2, 4, {-8, 1, 8},
       {-47, -16, -12, -8, -7, -4, -3, 0, 1, 4, 5, 8, 9, 12, 16},
       {2, 3, 5, 7, 47}},
      {2, 6, {-16, 0, 9},
       {-192, -111, -32, -24, -16, -8, -7, 0, 1, 8, 9, 16, 17, 25, 64},
       {2, 3, 5, 7, 17, 37}},
      {2, 8, {-31, 32},
       {-63, -47, -31, -15, 0, 1, 16, 32, 48, 64, 193, 256},
       {2, 3, 5, 7, 31, 47, 193}},
      {2, 10, {-64, 0, 57},
       {-3072, -128, -96, -64, -32, -7, 0, 25, 32, 57, 64, 89, 121, 177, 1024},
       {2, 3, 5, 7, 11, 19, 59, 89}},
      {2, 12, {-128, -47, 128},
       {-10079, -256, -192, -175, -128, -111, -64, -47, 0, 17, 64, 81, 128, 192, 256, 4096},
       {2, 3, 5, 7, 17, 37, 47, 10079}},
      {2, 14, {-256, -87, 0},
       {-49152, -41583, -512, -384, -343, -256, -215, -128, -87, 0, 41, 128, 169, 256, 16384},
       {2, 3, 5, 7, 13, 29, 41, 43, 83, 167}},
      {2, 16, {449, 512},
       {-63, 0, 193, 256, 449, 512, 705, 768, 961, 1024, 4993, 65536},
       {2, 3, 5, 7, 31, 47, 193, 449, 4993}},
      {3, 2, {-6, -5, -2, 3},
       {-23, -18, -12, -11, -9, -8, -6, -5, -3, -2, 0, 1, 3, 4, 6, 9},
       {2, 3, 5, 11, 23}},
      {3, 4, {-14, -9, 7, 18},
       {-194, -162, -47, -32, -27, -23, -18, -14, -11, -9, -5, -2, 0, 4, 7, 9, 16, 18, 25, 27, 36, 81},
       {2, 3, 5, 7, 11, 23, 47, 97}},
      {3, 6, {-54, 10, 46},
       {-2087, -108, -81, -71, -54, -44, -27, -17, -8, 0, 10, 19, 37, 46, 64, 73, 100, 729},
       {2, 3, 5, 11, 17, 19, 23, 37, 71, 73, 2087}},
      {3, 8, {-113, -81, 34, 162},
       {-18527, -13122, -6914, -275, -243, -194, -162, -128, -113, -81, -47, -32, 0, 34, 49, 81, 115, 162, 196, 243, 324, 6561},
       {2, 3, 5, 7, 11, 17, 23, 47, 97, 113, 191, 3457}},
      {3, 10, {-486, -482, 243, 475},
       {-118098, -972, -968, -729, -725, -486, -482, -243, -239, -11, 0, 4, 232, 243, 475, 486, 718, 729, 961, 48478, 55177, 59049},
       {2, 3, 5, 11, 19, 23, 29, 31, 239, 241, 359, 2399, 24239}},
      {3, 12, {-1358, 658, 1458},
       {-1161359, -2816, -2087, -1358, -800, -629, -71, 0, 100, 658, 729, 1387, 1458, 2116, 2187, 2916, 249841, 531441},
       {2, 3, 5, 7, 11, 17, 19, 23, 37, 47, 71, 73, 97, 433, 577, 1009, 1151, 2087}},
      {3, 14, {-4374, 2187, 2515, 3022},
       {-9565938, -8023682, -5216423, -8748, -6561, -4374, -2187, -1859, -1352, 0, 328, 835, 2187, 2515, 3022, 4374, 4702, 5209, 6561, 6889, 7396, 4782969},
       {2, 3, 5, 11, 13, 23, 41, 43, 83, 167, 337, 503, 673, 1511, 2351, 5209, 24023}},
      {3, 16, {-11966, -6561, -353, 13122},
       {-129015554, -86093442, -25088, -19683, -18527, -13475, -13122, -11966, -6914, -6561, -5405, -353, 0, 1156, 6208, 6561, 12769, 13122, 19683, 26244, 14044993, 43046721},
       {2, 3, 5, 7, 11, 17, 23, 31, 47, 97, 113, 191, 193, 353, 383, 2113, 3457, 30529, 36671}},
  };
  return rows;
}

namespace {

std::string format_set(const tracesets::IntSet& s) {
  std::string out;
  for (const i128 v : s) out += (out.empty() ? "" : ", ") + to_string(v);
  return "{" + out + "}";
}

void compare(std::int64_t n, unsigned e, const char* column, const tracesets::IntSet& golden,
             const tracesets::IntSet& computed, std::vector<CellDiff>& out) {
  if (golden == computed) return;
  CellDiff d{n, e, column, {}, {}};
  std::set_difference(golden.begin(), golden.end(), computed.begin(), computed.end(),
                      std::inserter(d.missing, d.missing.end()));
  std::set_difference(computed.begin(), computed.end(), golden.begin(), golden.end(),
                      std::inserter(d.unexpected, d.unexpected.end()));
  out.push_back(std::move(d));
}

}  // namespace

std::string CellDiff::describe() const {
  return "(" + std::to_string(n) + "," + std::to_string(e) + ") " + column + ": missing " + format_set(missing) +
         ", unexpected " + format_set(unexpected);
}

std::vector<CellDiff> diff(const std::vector<Row>& golden_rows) {
  std::vector<CellDiff> out;
  for (const auto& row : golden_rows) {
    const auto data = tracesets::compute(row.n, row.e);
    compare(row.n, row.e, "C", row.c_set, data.c_set, out);
    compare(row.n, row.e, "D", row.d_set, data.d_set.value_or(tracesets::IntSet{}), out);
    compare(row.n, row.e, "P", row.p_set, data.p_set.value_or(tracesets::IntSet{}), out);
  }
  return out;
}

}  // namespace shimura::table1
