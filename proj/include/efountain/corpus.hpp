//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// A corpus is a list of (semigroup, E) pairs in one text file. Entries are
// separated by lines reading "---"; each entry holds an optional
// "name: ..." line, a table in the usual format and an "E: ..." line.

#ifndef EFOUNTAIN_CORPUS_HPP_
#define EFOUNTAIN_CORPUS_HPP_

#include <cstddef>   // for size_t
#include <fstream>   // for ifstream
#include <istream>   // for istream
#include <ostream>   // for ostream
#include <sstream>   // for istringstream
#include <string>    // for string
#include <vector>    // for vector

#include "exception.hpp"
#include "semigroup.hpp"

namespace efountain {

  struct CorpusEntry {
    std::string         name;
    FiniteSemigroup     semigroup;
    std::vector<size_t> E;
  };

  //! Parses a list of element indices separated by spaces and/or commas.
  inline std::vector<size_t> parse_index_list(std::string const& text) {
    std::string cleaned = text;
    for (char& c : cleaned) {
      if (c == ',') {
        c = ' ';
      }
    }
    std::istringstream  in(cleaned);
    std::vector<size_t> out;
    std::string         tok;
    while (in >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos
          || tok.size() > 9) {
        throw Exception(ErrorCode::parse_error, "bad index '" + tok + "'");
      }
      out.push_back(std::stoul(tok));
    }
    return out;
  }

  inline std::vector<CorpusEntry> read_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string              table, name, line;
    std::vector<size_t>      E;
    bool                     have_e = false, any = false;
    size_t                   line_no = 0;
    auto                     flush = [&] {
      if (!any) {
        return;
      }
      if (!have_e) {
        throw Exception(ErrorCode::parse_error,
                        "corpus entry ending at line " + std::to_string(line_no)
                            + " has no E line");
      }
      auto S = parse_table(table);
      if (name.empty()) {
        name = "entry-" + std::to_string(out.size());
      }
      out.push_back({name, std::move(S), E});
      table.clear();
      name.clear();
      E.clear();
      have_e = any = false;
    };
    while (std::getline(in, line)) {
      ++line_no;
      size_t const start = line.find_first_not_of(" \t\r");
      std::string const body
          = start == std::string::npos ? std::string() : line.substr(start);
      if (body == "---") {
        flush();
      } else if (body.rfind("name:", 0) == 0) {
        name = body.substr(5);
        name.erase(0, name.find_first_not_of(' '));
        any = true;
      } else if (body.rfind("E:", 0) == 0) {
        E      = parse_index_list(body.substr(2));
        have_e = any = true;
      } else {
        table += line + '\n';
        any = any || (!body.empty() && body[0] != '#');
      }
    }
    flush();
    return out;
  }

  inline std::vector<CorpusEntry> read_corpus_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Exception(ErrorCode::io_error, "cannot open corpus " + path);
    }
    return read_corpus(in);
  }

  inline void write_corpus_entry(std::ostream& out, CorpusEntry const& entry) {
    out << "---\n";
    out << "name: " << entry.name << '\n';
    write_table(out, entry.semigroup);
    out << "E:";
    for (size_t e : entry.E) {
      out << ' ' << e;
    }
    out << '\n';
  }

}  // namespace efountain

#endif  // EFOUNTAIN_CORPUS_HPP_
