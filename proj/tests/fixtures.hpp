#pragma once

// Worked-example values transcribed from the reference tables. Binary cells
// are not copied; tests derive them from the integers.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

struct Row {
  std::string id;
  std::int64_t x1;
  std::int64_t x2;
  std::int64_t fitness = 0;
};

inline const std::vector<Row> initial_population = {
    {"B1", 4320, 3120, 28396800},  {"B2", 1233, 4523, 21977818},  {"B3", 5100, 3209, 36307681},
    {"B4", 4355, 5210, 46110125},  {"B5", 2331, 4266, 23632317},  {"B6", 2040, 2755, 11751625},
    {"B7", 5043, 1977, 29340378},  {"B8", 3460, 4781, 34829561},  {"B9", 1920, 5510, 34046500},
    {"B10", 4222, 3741, 31820365}, {"B11", 5401, 1740, 32198401}, {"B12", 3351, 2850, 19351701},
    {"B13", 5201, 4989, 51940522}, {"B14", 2188, 3477, 16876873}, {"B15", 3409, 1877, 15144410},
    {"B16", 4560, 2776, 28499776},
};

inline constexpr std::int64_t initial_average = 28889053;
inline constexpr std::int64_t iteration1_average = 52649382;
inline constexpr std::int64_t iteration2_average = 55693299;

// Subpopulations, best first.
inline const std::vector<std::string> subpop1 = {"B3", "B8", "B11", "B1", "B5", "B12", "B15", "B6"};
inline const std::vector<std::string> subpop2 = {"B4", "B9", "B10", "B1", "B2", "B12", "B14", "B6"};
inline constexpr std::int64_t good_threshold1 = 36307681, bad_threshold1 = 23632317;
inline constexpr std::int64_t good_threshold2 = 46110125, bad_threshold2 = 21977818;

// Partition labels for B1..B16.
inline const std::vector<std::string> partition1 = {
    "Good", "Bad",  "Good", "Ideal", "Bad",  "Bad", "Good", "Good",
    "Good", "Good", "Good", "Bad",   "Ideal", "Bad", "Bad", "Good"};
inline const std::vector<std::string> partition2 = {
    "Good", "Good", "Good", "Good", "Good", "Bad", "Good", "Good",
    "Good", "Good", "Good", "Bad",  "Ideal", "Bad", "Bad", "Good"};
// Index of the single label in partition2 that contradicts the inclusive
// Bad rule (B2 equals the Bad threshold).
inline constexpr std::size_t partition2_erratum = 1;

inline const std::vector<std::string> selection1 = {"B13", "B4", "B3", "B8"};
inline const std::vector<std::string> selection2 = {"B13", "B4", "B3", "B8"};

struct Cross {
  std::string parent;   // id providing the parent genome
  std::string partner;  // id providing the partner genome
  Row child1;
  Row child2;
};

inline const std::vector<Cross> crossover1 = {
    {"B13", "B3", {"C1", 5228, 2441}, {"C2", 5073, 6525}},
    {"B4", "B8", {"C3", 2180, 5165}, {"C4", 6915, 4826}},
    {"B3", "B12", {"C5", 2519, 3234}, {"C6", 6764, 2825}},
    {"B8", "B1", {"C7", 7008, 2416}, {"C8", 1028, 6189}},
};
inline const std::vector<Cross> crossover2 = {
    {"B13", "B4", {"C1", 5123, 4954}, {"C2", 4433, 5245}},
    {"B4", "B9", {"C3", 1088, 5126}, {"C4", 7683, 5594}},
    {"B3", "B10", {"C5", 5630, 3229}, {"C6", 4102, 3721}},
    {"B8", "B1", {"C7", 3488, 2416}, {"C8", 4292, 6189}},
};

struct CellRef {
  std::string child;
  std::size_t gene;  // 0-based
  std::int64_t half_split_value;
};

// Printed crossover cells that the floor/ceil half split does not produce.
inline const std::vector<CellRef> crossover1_errata = {{"C8", 0, 2116}};
inline const std::vector<CellRef> crossover2_errata = {
    {"C3", 0, 2176}, {"C4", 0, 3843}, {"C5", 0, 5118}, {"C6", 0, 4204}, {"C7", 0, 7008}, {"C8", 0, 2116}};

struct Mutation {
  std::string child;
  std::int64_t x1;
  std::int64_t x2;
  std::array<std::size_t, 2> bits;  // 0-based, most significant first
};

inline const std::vector<Mutation> mutation1 = {
    {"C1", 7276, 3465, {1, 1}}, {"C2", 7121, 7549, {1, 2}}, {"C3", 3204, 7213, {1, 1}},
    {"C4", 7939, 6874, {2, 1}}, {"C5", 3543, 3746, {1, 2}}, {"C6", 7788, 3849, {2, 1}},
    {"C7", 7024, 3440, {8, 1}}, {"C8", 1540, 7213, {1, 2}},
};
inline const std::vector<Mutation> mutation2 = {
    {"C1", 7171, 7002, {1, 1}}, {"C2", 6481, 7293, {1, 1}}, {"C3", 1600, 7174, {1, 1}},
    {"C4", 7939, 7642, {4, 1}}, {"C5", 7678, 3741, {1, 2}}, {"C6", 6150, 3977, {1, 3}},
    {"C7", 4000, 3440, {2, 1}}, {"C8", 6340, 7213, {1, 2}},
};

inline const std::vector<std::string> rejected1 = {"C7"};
inline const std::vector<std::string> rejected2 = {"C3", "C4", "C7"};

// Accepted-children fitness after each iteration.
inline const std::vector<std::int64_t> accepted_fitness1 = {
    64946401, 107696042, 62292985, 110279597, 26585365, 75467745, 54398969};
inline const std::vector<std::int64_t> accepted_fitness2 = {
    100451245, 95191210, 72946765, 53639029, 92222969};

// Summary sets whose truncated means give the iteration averages.
inline const std::vector<std::int64_t> summary1 = {
    51940522, 36307681, 46110125, 34829561, 36307681, 19351701, 34829561, 28396800,
    64946401, 107696042, 62292985, 110279597, 26585365, 75467745, 54398969};
inline const std::vector<std::int64_t> summary2 = {
    51940522, 46110125, 46110125, 34046500, 36307681, 31820365, 34829561, 28396800,
    100451245, 95191210, 72946765, 53639029, 92222969};

}  // namespace fixtures
