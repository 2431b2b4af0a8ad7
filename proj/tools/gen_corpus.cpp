// Regenerates the corpus/ files from their in-code definitions. Run from
// the repository root (or pass the target directory); the test suite fails
// if the files on disk drift from what this writes.

#include <fstream>
#include <iostream>
#include <string>

#include "corpus.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus";
  for (const auto& [name, w] : catkit_corpus::corpus_workspaces()) {
    std::string path = dir + "/" + name + ".ck";
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    f << catkit::save_workspace(w);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
