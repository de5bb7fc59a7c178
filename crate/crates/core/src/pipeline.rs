pub fn _placeholder_pipeline() {}
