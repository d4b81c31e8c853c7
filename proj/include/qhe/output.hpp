#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "qhe/config.hpp"
#include "qhe/stirling.hpp"

namespace qhe {

// std::monostate prints as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

// %.12g, with "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double value);

// Streams rows as CSV (header + rows) or as a JSON array of objects with the
// same keys. Rows are flushed as written so an interrupted run keeps its
// completed prefix.
class TableWriter {
  public:
    TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);
    TableWriter(const TableWriter&) = delete;
    TableWriter& operator=(const TableWriter&) = delete;
    ~TableWriter();

    void write_row(const std::vector<Cell>& row);
    void flush();
    void finish();

  private:
    std::ostream& out_;
    OutputFormat format_;
    std::vector<std::string> columns_;
    std::size_t rows_ = 0;
    bool finished_ = false;
};

// One row of cycle/sweep/toy/converge-cutoff output.
struct SweepRecord {
    std::string model;
    std::optional<int> n_particles;
    std::optional<double> gamma;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double beta_hot = 0.0;
    double beta_cold = 0.0;
    std::optional<int> cutoff;
    CycleResult result;
};

// model,N,gamma,lambda1,lambda2,beta_hot,beta_cold,cutoff,q_ab,q_bc,q_cd,q_da,
// work,efficiency,carnot,status
const std::vector<std::string>& sweep_columns();
std::vector<Cell> to_row(const SweepRecord& record);

} // namespace qhe
