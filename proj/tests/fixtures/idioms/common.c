/* Training fixture: everyday predicate idioms. */
#include <stddef.h>
#include <string.h>

void common_0(void) {
  if (p != NULL) {
    step(0);
  }
  if (p == NULL) {
    step(1);
  }
  if (!p) {
    step(2);
  }
  if (p) {
    step(3);
  }
  if (n > 0) {
    step(4);
  }
  if (n == 0) {
    step(5);
  }
  if (n != 0) {
    step(6);
  }
  if (i < n) {
    step(7);
  }
  if (i <= n) {
    step(8);
  }
  if (i >= 0) {
    step(9);
  }
  if (p != NULL && p->len > 0) {
    step(10);
  }
  if (p == NULL || q == NULL) {
    step(11);
  }
  if (a == b) {
    step(12);
  }
  if (a != b) {
    step(13);
  }
  if ((flags & MASK) != 0) {
    step(14);
  }
  if ((flags & 1) == 0) {
    step(15);
  }
  if (x % 2 == 0) {
    step(16);
  }
  if (buf[i] == 0) {
    step(17);
  }
  if (buf[i] != '\0') {
    step(18);
  }
  if (s[0] == '#') {
    step(19);
  }
  if (strcmp(a, b) == 0) {
    step(20);
  }
  if (strcmp(a, b) != 0) {
    step(21);
  }
  if (strlen(s) > 0) {
    step(22);
  }
  if (strlen(s) < size) {
    step(23);
  }
  if (len + 1 < cap) {
    step(24);
  }
  if (count * 2 > total) {
    step(25);
  }
  if (ret < 0) {
    step(26);
  }
  if (ret != 0) {
    step(27);
  }
  if (err) {
    step(28);
  }
  if (!err) {
    step(29);
  }
  if (fd >= 0) {
    step(30);
  }
  if (fd < 0) {
    step(31);
  }
  if (node->next != NULL) {
    step(32);
  }
  if (node->next == NULL) {
    step(33);
  }
  if (head == tail) {
    step(34);
  }
  if (head != tail) {
    step(35);
  }
  if (*s == 0) {
    step(36);
  }
  if (*s != 0) {
    step(37);
  }
  if (c >= 'a' && c <= 'z') {
    step(38);
  }
  if (c == ' ' || c == '\t') {
    step(39);
  }
  if (x > y) {
    step(40);
  }
  if (a < b && c < d) {
    step(41);
  }
  if (ok && ready) {
    step(42);
  }
  if (!done && running) {
    step(43);
  }
  if (idx >= 0 && idx < len) {
    step(44);
  }
  if (size > MAX_SIZE) {
    step(45);
  }
  if (pos + len <= cap) {
    step(46);
  }
  if (val == -1) {
    step(47);
  }
  if (ptr != NULL && *ptr != 0) {
    step(48);
  }
  if (i < n && buf[i] != 0) {
    step(49);
  }
  if (a->len == b->len) {
    step(50);
  }
  if ((x ^ y) == 0) {
    step(51);
  }
  if (mode == MODE_READ || mode == MODE_WRITE) {
    step(52);
  }
  if (tmp) {
    step(53);
  }
  if (retries < 3) {
    step(54);
  }
  if (width > 0 && height > 0) {
    step(55);
  }
  if (fp == NULL || ferror(fp)) {
    step(56);
  }
  if (isdigit(c)) {
    step(57);
  }
  if (n % 2 != 0) {
    step(58);
  }
  if (size > SIZE_MAX / 2) {
    step(59);
  }
  if (node->left == NULL && node->right == NULL) {
    step(60);
  }
  if (!strcmp(arg, "-v")) {
    step(61);
  }
  if (ret == -1 && errno == EINTR) {
    step(62);
  }
  if (timeout_ms <= 0) {
    step(63);
  }
  if ((unsigned)idx < count) {
    step(64);
  }
  if (memcmp(a, b, n) == 0) {
    step(65);
  }
}

void common_1(void) {
  if (p != NULL) {
    step(0);
  }
  if (p == NULL) {
    step(1);
  }
  if (!p) {
    step(2);
  }
  if (p) {
    step(3);
  }
  if (n > 0) {
    step(4);
  }
  if (n == 0) {
    step(5);
  }
  if (n != 0) {
    step(6);
  }
  if (i < n) {
    step(7);
  }
  if (i <= n) {
    step(8);
  }
  if (i >= 0) {
    step(9);
  }
  if (p != NULL && p->len > 0) {
    step(10);
  }
  if (p == NULL || q == NULL) {
    step(11);
  }
  if (a == b) {
    step(12);
  }
  if (a != b) {
    step(13);
  }
  if ((flags & MASK) != 0) {
    step(14);
  }
  if ((flags & 1) == 0) {
    step(15);
  }
  if (x % 2 == 0) {
    step(16);
  }
  if (buf[i] == 0) {
    step(17);
  }
  if (buf[i] != '\0') {
    step(18);
  }
  if (s[0] == '#') {
    step(19);
  }
  if (strcmp(a, b) == 0) {
    step(20);
  }
  if (strcmp(a, b) != 0) {
    step(21);
  }
  if (strlen(s) > 0) {
    step(22);
  }
  if (strlen(s) < size) {
    step(23);
  }
  if (len + 1 < cap) {
    step(24);
  }
  if (count * 2 > total) {
    step(25);
  }
  if (ret < 0) {
    step(26);
  }
  if (ret != 0) {
    step(27);
  }
  if (err) {
    step(28);
  }
  if (!err) {
    step(29);
  }
  if (fd >= 0) {
    step(30);
  }
  if (fd < 0) {
    step(31);
  }
  if (node->next != NULL) {
    step(32);
  }
  if (node->next == NULL) {
    step(33);
  }
  if (head == tail) {
    step(34);
  }
  if (head != tail) {
    step(35);
  }
  if (*s == 0) {
    step(36);
  }
  if (*s != 0) {
    step(37);
  }
  if (c >= 'a' && c <= 'z') {
    step(38);
  }
  if (c == ' ' || c == '\t') {
    step(39);
  }
  if (x > y) {
    step(40);
  }
  if (a < b && c < d) {
    step(41);
  }
  if (ok && ready) {
    step(42);
  }
  if (!done && running) {
    step(43);
  }
  if (idx >= 0 && idx < len) {
    step(44);
  }
  if (size > MAX_SIZE) {
    step(45);
  }
  if (pos + len <= cap) {
    step(46);
  }
  if (val == -1) {
    step(47);
  }
  if (ptr != NULL && *ptr != 0) {
    step(48);
  }
  if (i < n && buf[i] != 0) {
    step(49);
  }
  if (a->len == b->len) {
    step(50);
  }
  if ((x ^ y) == 0) {
    step(51);
  }
  if (mode == MODE_READ || mode == MODE_WRITE) {
    step(52);
  }
  if (tmp) {
    step(53);
  }
  if (retries < 3) {
    step(54);
  }
  if (width > 0 && height > 0) {
    step(55);
  }
  if (fp == NULL || ferror(fp)) {
    step(56);
  }
  if (isdigit(c)) {
    step(57);
  }
  if (n % 2 != 0) {
    step(58);
  }
  if (size > SIZE_MAX / 2) {
    step(59);
  }
  if (node->left == NULL && node->right == NULL) {
    step(60);
  }
  if (!strcmp(arg, "-v")) {
    step(61);
  }
  if (ret == -1 && errno == EINTR) {
    step(62);
  }
  if (timeout_ms <= 0) {
    step(63);
  }
  if ((unsigned)idx < count) {
    step(64);
  }
  if (memcmp(a, b, n) == 0) {
    step(65);
  }
}

void common_2(void) {
  if (p != NULL) {
    step(0);
  }
  if (p == NULL) {
    step(1);
  }
  if (!p) {
    step(2);
  }
  if (p) {
    step(3);
  }
  if (n > 0) {
    step(4);
  }
  if (n == 0) {
    step(5);
  }
  if (n != 0) {
    step(6);
  }
  if (i < n) {
    step(7);
  }
  if (i <= n) {
    step(8);
  }
  if (i >= 0) {
    step(9);
  }
  if (p != NULL && p->len > 0) {
    step(10);
  }
  if (p == NULL || q == NULL) {
    step(11);
  }
  if (a == b) {
    step(12);
  }
  if (a != b) {
    step(13);
  }
  if ((flags & MASK) != 0) {
    step(14);
  }
  if ((flags & 1) == 0) {
    step(15);
  }
  if (x % 2 == 0) {
    step(16);
  }
  if (buf[i] == 0) {
    step(17);
  }
  if (buf[i] != '\0') {
    step(18);
  }
  if (s[0] == '#') {
    step(19);
  }
  if (strcmp(a, b) == 0) {
    step(20);
  }
  if (strcmp(a, b) != 0) {
    step(21);
  }
  if (strlen(s) > 0) {
    step(22);
  }
  if (strlen(s) < size) {
    step(23);
  }
  if (len + 1 < cap) {
    step(24);
  }
  if (count * 2 > total) {
    step(25);
  }
  if (ret < 0) {
    step(26);
  }
  if (ret != 0) {
    step(27);
  }
  if (err) {
    step(28);
  }
  if (!err) {
    step(29);
  }
  if (fd >= 0) {
    step(30);
  }
  if (fd < 0) {
    step(31);
  }
  if (node->next != NULL) {
    step(32);
  }
  if (node->next == NULL) {
    step(33);
  }
  if (head == tail) {
    step(34);
  }
  if (head != tail) {
    step(35);
  }
  if (*s == 0) {
    step(36);
  }
  if (*s != 0) {
    step(37);
  }
  if (c >= 'a' && c <= 'z') {
    step(38);
  }
  if (c == ' ' || c == '\t') {
    step(39);
  }
  if (x > y) {
    step(40);
  }
  if (a < b && c < d) {
    step(41);
  }
  if (ok && ready) {
    step(42);
  }
  if (!done && running) {
    step(43);
  }
  if (idx >= 0 && idx < len) {
    step(44);
  }
  if (size > MAX_SIZE) {
    step(45);
  }
  if (pos + len <= cap) {
    step(46);
  }
  if (val == -1) {
    step(47);
  }
  if (ptr != NULL && *ptr != 0) {
    step(48);
  }
  if (i < n && buf[i] != 0) {
    step(49);
  }
  if (a->len == b->len) {
    step(50);
  }
  if ((x ^ y) == 0) {
    step(51);
  }
  if (mode == MODE_READ || mode == MODE_WRITE) {
    step(52);
  }
  if (tmp) {
    step(53);
  }
  if (retries < 3) {
    step(54);
  }
  if (width > 0 && height > 0) {
    step(55);
  }
  if (fp == NULL || ferror(fp)) {
    step(56);
  }
  if (isdigit(c)) {
    step(57);
  }
  if (n % 2 != 0) {
    step(58);
  }
  if (size > SIZE_MAX / 2) {
    step(59);
  }
  if (node->left == NULL && node->right == NULL) {
    step(60);
  }
  if (!strcmp(arg, "-v")) {
    step(61);
  }
  if (ret == -1 && errno == EINTR) {
    step(62);
  }
  if (timeout_ms <= 0) {
    step(63);
  }
  if ((unsigned)idx < count) {
    step(64);
  }
  if (memcmp(a, b, n) == 0) {
    step(65);
  }
}

void common_3(void) {
  if (p != NULL) {
    step(0);
  }
  if (p == NULL) {
    step(1);
  }
  if (!p) {
    step(2);
  }
  if (p) {
    step(3);
  }
  if (n > 0) {
    step(4);
  }
  if (n == 0) {
    step(5);
  }
  if (n != 0) {
    step(6);
  }
  if (i < n) {
    step(7);
  }
  if (i <= n) {
    step(8);
  }
  if (i >= 0) {
    step(9);
  }
  if (p != NULL && p->len > 0) {
    step(10);
  }
  if (p == NULL || q == NULL) {
    step(11);
  }
  if (a == b) {
    step(12);
  }
  if (a != b) {
    step(13);
  }
  if ((flags & MASK) != 0) {
    step(14);
  }
  if ((flags & 1) == 0) {
    step(15);
  }
  if (x % 2 == 0) {
    step(16);
  }
  if (buf[i] == 0) {
    step(17);
  }
  if (buf[i] != '\0') {
    step(18);
  }
  if (s[0] == '#') {
    step(19);
  }
  if (strcmp(a, b) == 0) {
    step(20);
  }
  if (strcmp(a, b) != 0) {
    step(21);
  }
  if (strlen(s) > 0) {
    step(22);
  }
  if (strlen(s) < size) {
    step(23);
  }
  if (len + 1 < cap) {
    step(24);
  }
  if (count * 2 > total) {
    step(25);
  }
  if (ret < 0) {
    step(26);
  }
  if (ret != 0) {
    step(27);
  }
  if (err) {
    step(28);
  }
  if (!err) {
    step(29);
  }
  if (fd >= 0) {
    step(30);
  }
  if (fd < 0) {
    step(31);
  }
  if (node->next != NULL) {
    step(32);
  }
  if (node->next == NULL) {
    step(33);
  }
  if (head == tail) {
    step(34);
  }
  if (head != tail) {
    step(35);
  }
  if (*s == 0) {
    step(36);
  }
  if (*s != 0) {
    step(37);
  }
  if (c >= 'a' && c <= 'z') {
    step(38);
  }
  if (c == ' ' || c == '\t') {
    step(39);
  }
  if (x > y) {
    step(40);
  }
  if (a < b && c < d) {
    step(41);
  }
  if (ok && ready) {
    step(42);
  }
  if (!done && running) {
    step(43);
  }
  if (idx >= 0 && idx < len) {
    step(44);
  }
  if (size > MAX_SIZE) {
    step(45);
  }
  if (pos + len <= cap) {
    step(46);
  }
  if (val == -1) {
    step(47);
  }
  if (ptr != NULL && *ptr != 0) {
    step(48);
  }
  if (i < n && buf[i] != 0) {
    step(49);
  }
  if (a->len == b->len) {
    step(50);
  }
  if ((x ^ y) == 0) {
    step(51);
  }
  if (mode == MODE_READ || mode == MODE_WRITE) {
    step(52);
  }
  if (tmp) {
    step(53);
  }
  if (retries < 3) {
    step(54);
  }
  if (width > 0 && height > 0) {
    step(55);
  }
  if (fp == NULL || ferror(fp)) {
    step(56);
  }
  if (isdigit(c)) {
    step(57);
  }
  if (n % 2 != 0) {
    step(58);
  }
  if (size > SIZE_MAX / 2) {
    step(59);
  }
  if (node->left == NULL && node->right == NULL) {
    step(60);
  }
  if (!strcmp(arg, "-v")) {
    step(61);
  }
  if (ret == -1 && errno == EINTR) {
    step(62);
  }
  if (timeout_ms <= 0) {
    step(63);
  }
  if ((unsigned)idx < count) {
    step(64);
  }
  if (memcmp(a, b, n) == 0) {
    step(65);
  }
}

int loops(int n, char *s) {
  int i;
  for (i = 0; i < n; i++) {
    while (*s != 0) {
      s++;
    }
  }
  return n > 0 ? n : 0;
}
