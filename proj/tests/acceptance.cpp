// acceptance suite placeholder
int main() { return 1; }
