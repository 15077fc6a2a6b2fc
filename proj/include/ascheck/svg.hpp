#pragma once

#include <filesystem>

#include "ascheck/diagnostics.hpp"

namespace ascheck {

/// Render the summary scatter as a standalone SVG file: axis labels `w'x`
/// and `f`, one circular marker per sample, linear axes padded 5% beyond the
/// data range (a degenerate range is padded by +/-1 instead). Output is a
/// pure function of the scatter, so identical input gives byte-identical
/// files. Throws DimensionError on an empty scatter, IoError on write
/// failure.
void emit_scatter_svg(const SummaryScatter& sc, const std::filesystem::path& path);

}  // namespace ascheck
