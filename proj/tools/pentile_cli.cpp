#include <cstdio>

int main() {
  std::puts("pentile: placeholder");
  return 0;
}
