#include "xfam/cli.hpp"

int main(int argc, char** argv) {
  return xfam::cli::run({argv + 1, argv + argc});
}
