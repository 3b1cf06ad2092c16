#include <stdexcept>
#include <string>
#include <vector>

/** expect: 1 */
int f01(int a, int b) {
    int c = a + b;
    return c;
}

/** expect: 3 */
int f02(const std::vector<int>& xs) {
    int total = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] > 0) {
            total += xs[i];
        }
    }
    return total;
}

/** expect: 3 */
int f03(int x) {
    if (x < 0) {
        return -1;
    } else if (x == 0) {
        return 0;
    } else {
        return 1;
    }
}

/** expect: 3 */
int f04(int n, int limit) {
    int i = 0;
    while (i < n && i < limit) {
        ++i;
    }
    return i;
}

/** expect: 3 */
int f05(const std::string& text) {
    try {
        return std::stoi(text);
    } catch (const std::invalid_argument&) {
        return 0;
    } catch (...) {
        return -1;
    }
}

/** expect: 2 */
int f06(int x) {
    return x > 0 ? x : -x;
}

/** expect: 4 */
const char* f07(int code) {
    switch (code) {
        case 1:
            return "one";
        case 2:
            return "two";
        case 3:
            return "three";
        default:
            return "many";
    }
}

/** expect: 3 */
bool f08(bool a, bool b, bool c) {
    return a || b || c;
}

/** expect: 2 */
int f09(int n) {
    int i = 0;
    do {
        ++i;
    } while (i < n);
    return i;
}

/** expect: 3 */
int f10(const std::vector<int>& xs) {
    int count = 0;
    for (int x : xs) {
        if (x % 2 == 0) {
            ++count;
        }
    }
    return count;
}

/** expect: 2 */
int f11(int x) {
    auto abs = [](int v) { return v > 0 ? v : -v; };
    return abs(x);
}

class Widget {
public:
    Widget(int v);
    ~Widget();

    /** expect: 2 */
    bool operator==(const Widget& o) const {
        return v_ == o.v_ && p_ == o.p_;
    }

private:
    int v_;
    int* p_ = nullptr;
};

/** expect: 2 */
Widget::Widget(int v) : v_(v) {
    if (v < 0) {
        v_ = 0;
    }
}

/** expect: 2 */
Widget::~Widget() {
    if (p_) delete p_;
}

/** expect: 3 */
bool f13(bool a, bool b, bool c) {
    return a and b or c;
}

/** expect: 2 */
template <typename T>
T f14(T a, T b) {
    if (a < b) {
        return b;
    }
    return a;
}

/** expect: 4 */
int f16(bool a, bool b, bool c) {
    if (a) {
        if (b) {
            if (c) {
                return 3;
            }
        }
    }
    return 0;
}

/** expect: 2 */
template <typename T>
int f17(T value) {
    if constexpr (sizeof(T) > 4) {
        return 8;
    }
    return static_cast<int>(value);
}

/** expect: 2 */
int* f18(int* p) {
    return p ? p : nullptr;
}

/** expect: 4 */
int f19(const std::vector<int>& xs, int stop) {
    int i = 0;
    for (; i < static_cast<int>(xs.size()) || xs.empty(); ++i) {
        if (xs.empty()) break;
    }
    return i + stop;
}

/** expect: 4 */
int f20(int n) {
    int steps = 0;
    while (n != 1) {
        if (n % 2 == 0) {
            n /= 2;
        } else if (n % 3 == 0) {
            n /= 3;
        } else {
            n = 3 * n + 1;
        }
        ++steps;
    }
    return steps;
}

/** expect: 1 */
void f21(std::vector<int>& xs) {
    xs.clear();
}
