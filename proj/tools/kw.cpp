// Command-line front end; subcommands are wired up as the library grows.
#include <cstdio>

#include "kw/field.hpp"

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::printf("kw: no subcommand\n");
  return 2;
}
