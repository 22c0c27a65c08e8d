#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwte/params.hpp"

namespace nwte {

/// A rendered result table: header row plus preformatted cells.  Numeric
/// deltas against the reference values (when the table has any) are exposed
/// for programmatic checks.
struct Table {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<double> deltas;  // per comparison cell, |computed - reference|
    double max_abs_delta() const;
};

struct TableOptions {
    std::string data_dir;  // resolved via resolve_data_dir when empty
    std::uint64_t seed = 20240915;
};

/// Recomputes one of the published tables (selector in {1,2,3,5,6,7,8}) with
/// expected and delta columns.  Selectors 5 and 6 fit all nine models to the
/// bundled datasets; the others need no data.
Table reproduce_table(int selector, const TableOptions& opts = {});

void write_table_csv(const Table& t, const std::string& path);
void write_table_json(const Table& t, const std::string& path);
std::string table_json_string(const Table& t);
std::string render_table_text(const Table& t);

enum class PlotKind { pdf_shapes, hrf_shapes, skew_kurt_surface };
PlotKind plot_kind_from_name(const std::string& name);

struct PlotSpec {
    PlotKind kind = PlotKind::pdf_shapes;
    int points = 500;                       // grid points per curve
    double lambda = 0.5;                    // rate for the shape surface
    std::optional<NwteParams> params;       // single curve override
    double x_max = 0.0;                     // 0 = automatic (high quantile)
};

/// Columnar data sufficient to redraw the density / hazard shape plots and
/// the quantile-based skewness/kurtosis surface.
Table emit_plot_data(const PlotSpec& spec);

}  // namespace nwte
