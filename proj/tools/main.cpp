#include <cstdio>

int main() {
  std::puts("timebar: CLI under construction");
  return 0;
}
