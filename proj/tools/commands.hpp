#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "pegboard/render.hpp"

namespace pegboard::cli {

// Exit status contract.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kPairingError = 3;
inline constexpr int kViolation = 4;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "pegboard-report";
inline constexpr int kReportSchemaVersion = 1;

// PEGBOARD_SEED when set to an integer, otherwise a fixed default.
std::uint64_t default_seed();

struct ConvertArgs {
  std::filesystem::path in;
  std::filesystem::path out;
};
int cmd_convert(const ConvertArgs& args, std::ostream& out, std::ostream& err);

struct RankArgs {
  std::filesystem::path a;
  std::filesystem::path b;
  std::string psi = "1,0,0,1";
  bool by_spinc = false;
  std::optional<std::filesystem::path> report;
};
int cmd_rank(const RankArgs& args, std::ostream& out, std::ostream& err);

struct PinchArgs {
  std::filesystem::path curves;
  std::int64_t order = 2;
  std::optional<std::filesystem::path> alphas;  // directory of curve files
  std::optional<std::filesystem::path> trace;
  std::optional<std::filesystem::path> svg_dir;
};
int cmd_pinch(const PinchArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::int64_t order = 2;
  std::int64_t samples = 50;
  std::uint64_t seed = 1;
  std::int64_t alpha_grid = 7;
  std::optional<std::int64_t> only_sample;  // replay one sample of the run
  std::optional<std::filesystem::path> out;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct RenderArgs {
  std::filesystem::path in;
  Cover cover = Cover::None;
  std::filesystem::path out;
};
int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err);

}  // namespace pegboard::cli
