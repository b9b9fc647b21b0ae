#include <cstdio>

int main() {
  std::puts("gdet: subcommands land with the full build");
  return 2;
}
