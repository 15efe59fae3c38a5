#include <cstring>
#include <iostream>

#include "kottman/acceptance.hpp"

int main(int argc, char** argv) {
  kottman::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
  return kottman::run_acceptance(opt, std::cout).passed() ? 0 : 1;
}
