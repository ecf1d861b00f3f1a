/*
   Copyright 2026 The LSA Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// LD_PRELOAD shim that denies all network access. Every socket creation
// and name resolution fails with EPERM, so a preloaded process can only do
// local file I/O. Used to demonstrate that offline verification succeeds
// with the network hard-disabled.

#include <cerrno>
#include <netdb.h>
#include <sys/socket.h>

extern "C" {

int socket(int, int, int) {
  errno = EPERM;
  return -1;
}

int connect(int, const struct sockaddr*, socklen_t) {
  errno = EPERM;
  return -1;
}

int getaddrinfo(const char*, const char*, const struct addrinfo*, struct addrinfo**) {
  return EAI_FAIL;
}

}  // extern "C"
