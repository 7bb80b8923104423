#pragma once

#include <fstream>
#include <sstream>
#include <string>

#ifndef HTA_CORPUS_DIR
#define HTA_CORPUS_DIR "corpus"
#endif

namespace hta::test {

inline std::string corpus_dir() { return HTA_CORPUS_DIR; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string corpus_program(const std::string& name) {
  return read_file(corpus_dir() + "/programs/" + name);
}

inline std::string corpus_proof(const std::string& name) {
  return read_file(corpus_dir() + "/proofs/" + name);
}

}  // namespace hta::test
