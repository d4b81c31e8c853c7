#include "qhe/output.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "qhe/errors.hpp"

namespace qhe {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

namespace {

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        }
    };
    return std::visit(Visitor{}, cell);
}

std::string json_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : "null"; }
        std::string operator()(const std::string& v) const { return nlohmann::json(v).dump(); }
    };
    return std::visit(Visitor{}, cell);
}

} // namespace

TableWriter::TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
    if (format_ == OutputFormat::Csv) {
        for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
        out_ << '\n';
    } else {
        out_ << "[";
    }
    if (!out_) throw IoError("failed to write output header");
}

TableWriter::~TableWriter() {
    try {
        finish();
    } catch (...) {
    }
}

void TableWriter::write_row(const std::vector<Cell>& row) {
    if (row.size() != columns_.size()) throw ContractError("row width does not match the table columns");
    if (format_ == OutputFormat::Csv) {
        for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << csv_cell(row[i]);
        out_ << '\n';
    } else {
        out_ << (rows_ ? ",\n  {" : "\n  {");
        for (std::size_t i = 0; i < row.size(); ++i) {
            out_ << (i ? ", " : "") << nlohmann::json(columns_[i]).dump() << ": " << json_cell(row[i]);
        }
        out_ << "}";
    }
    ++rows_;
    if (!out_) throw IoError("failed to write output row");
}

void TableWriter::flush() {
    out_.flush();
    if (!out_) throw IoError("failed to flush output");
}

void TableWriter::finish() {
    if (finished_) return;
    finished_ = true;
    if (format_ == OutputFormat::Json) out_ << (rows_ ? "\n]\n" : "]\n");
    flush();
}

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> columns = {
        "model", "N",    "gamma", "lambda1", "lambda2", "beta_hot", "beta_cold",  "cutoff",
        "q_ab",  "q_bc", "q_cd",  "q_da",    "work",    "efficiency", "carnot", "status",
    };
    return columns;
}

std::vector<Cell> to_row(const SweepRecord& record) {
    const CycleResult& r = record.result;
    auto opt_int = [](const std::optional<int>& v) -> Cell {
        return v ? Cell{static_cast<std::int64_t>(*v)} : Cell{};
    };
    return {
        record.model,
        opt_int(record.n_particles),
        record.gamma ? Cell{*record.gamma} : Cell{},
        record.lambda1,
        record.lambda2,
        record.beta_hot,
        record.beta_cold,
        opt_int(record.cutoff),
        r.q_ab,
        r.q_bc,
        r.q_cd,
        r.q_da,
        r.work,
        r.efficiency,
        r.carnot,
        std::string(to_string(r.status)),
    };
}

} // namespace qhe
