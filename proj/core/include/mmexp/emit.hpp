#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "mmexp/experiment.hpp"

namespace mmexp {

enum class Format { csv, json, svg };

std::string_view to_string(Format f);
Format parse_format(std::string_view name);

/// Header `n,gm_l1,mk_l1,gm_sup,mk_sup`, values fixed with 6 decimals, "nan"
/// for columns that were not computed.
std::string table_csv(std::span<const ErrorReportRow> rows);
/// Array of {n, gm_l1, mk_l1, gm_sup, mk_sup[, flag]}; uncomputed values are null.
std::string table_json(std::span<const ErrorReportRow> rows);
/// L1 error against n for both operators.
std::string table_svg(std::span<const ErrorReportRow> rows, std::string_view kernel,
                      std::string_view function);

/// Header `z,target,<op>_n<n>...`.
std::string curves_csv(const CurveSet& curves);
std::string curves_json(const CurveSet& curves);
/// One target polyline plus one polyline per series.
std::string curves_svg(const CurveSet& curves);

/// Writes `content` to `path`; throws IoError naming the path on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

void emit(std::span<const ErrorReportRow> rows, Format format, const std::filesystem::path& path,
          std::string_view kernel = "ramp", std::string_view function = "f");
void emit(const CurveSet& curves, Format format, const std::filesystem::path& path);

}  // namespace mmexp
