pub fn _placeholder_report() {}
