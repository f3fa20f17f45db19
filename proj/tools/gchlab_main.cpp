#include <string>
#include <vector>

#include "gchlab/cli.hpp"

int main(int argc, char** argv) {
  return gchlab::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
