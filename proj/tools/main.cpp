#include <iostream>
int main() { std::cout << "extab: work in progress\n"; return 0; }
