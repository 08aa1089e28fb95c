#pragma once

#include <string>
#include <vector>

#include "coarsetr/homology/abelian.hpp"
#include "workspace.hpp"

namespace coarsetr::cli {

enum class Format { json, table, csv };

/// A titled table for the text and CSV renderings.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Result of one command or task: the JSON report plus its tables.
/// `lines` are printed after the tables in text mode (verdicts and such).
struct Output {
  Json json = Json::object();
  std::vector<Table> tables;
  std::vector<std::string> lines;
  ExitCode code = kOk;
};

Json big_json(homology::BigInt const& v);
Json matrix_json(homology::Matrix<homology::BigInt> const& m);
/// "[[1,0],[0,2]]"
std::string matrix_text(homology::Matrix<homology::BigInt> const& m);
std::string torsion_text(homology::AbelianGroup const& a);

/// Error report: {"error": {"kind", "pointer", "message"}}.
Json error_json(CliError const& e);

std::string render(Output const& out, Format format);
std::string render_error(CliError const& e, Format format);

}  // namespace coarsetr::cli
