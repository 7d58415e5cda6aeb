#include <cstdio>

int main() {
  std::puts("scatinv: CLI under construction");
  return 0;
}
