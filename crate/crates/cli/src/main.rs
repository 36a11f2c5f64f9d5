// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(cqed_lab::run(std::env::args_os()));
}
