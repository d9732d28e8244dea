#include "formgym/schema.hpp"

namespace formgym {
namespace {

FieldSpec text(std::string id, std::string label, std::string hint, bool required = true) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = FieldType::StringInput;
    f.value_hint = std::move(hint);
    f.required = required;
    return f;
}

FieldSpec description(std::string id, std::string label, std::string hint, bool required = true) {
    FieldSpec f = text(std::move(id), std::move(label), std::move(hint), required);
    f.field_type = FieldType::Description;
    return f;
}

FieldSpec with_options(FieldType type, std::string id, std::string label, std::vector<std::string> options) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = type;
    f.options = std::move(options);
    return f;
}

FieldSpec dropdown(std::string id, std::string label, std::vector<std::string> options) {
    return with_options(FieldType::Dropdown, std::move(id), std::move(label), std::move(options));
}

FieldSpec binary(std::string id, std::string label, std::vector<std::string> options = {"Yes", "No"}) {
    return with_options(FieldType::BinaryChoice, std::move(id), std::move(label), std::move(options));
}

FieldSpec multiple(std::string id, std::string label, std::vector<std::string> options) {
    return with_options(FieldType::MultipleChoice, std::move(id), std::move(label), std::move(options));
}

FieldSpec date(std::string id, std::string label) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = FieldType::Date;
    return f;
}

FieldSpec check(std::string id, std::string label) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = FieldType::CheckboxInput;
    return f;
}

FieldSpec number(std::string id, std::string label, double min, double max, std::string hint) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = FieldType::NumericInput;
    f.numeric_range = NumericRange{min, max};
    f.value_hint = std::move(hint);
    return f;
}

FieldSpec file(std::string id, std::string label, std::string hint, bool scored = true) {
    FieldSpec f;
    f.field_id = std::move(id);
    f.label = std::move(label);
    f.field_type = FieldType::FileUpload;
    f.value_hint = std::move(hint);
    f.scored = scored;
    f.required = scored;
    return f;
}

FormSchema form(std::string id, std::string name, std::string category, bool multi_page,
                std::vector<FieldSpec> fields, std::string theme = "plain") {
    FormSchema schema;
    schema.form_id = std::move(id);
    schema.name = std::move(name);
    schema.domain_category = std::move(category);
    schema.fields = std::move(fields);
    schema.theme_id = std::move(theme);
    if (multi_page) paginate(schema);
    return schema;
}

std::vector<FormSchema> make_catalog() {
    std::vector<FormSchema> c;
    const std::string academic = "Academic & Research";
    const std::string business = "Professional & Business";
    const std::string arts = "Arts & Creative";
    const std::string tech = "Technology & Software";
    const std::string finance = "Finance & Banking";
    const std::string health = "Healthcare & Medical";
    const std::string legal = "Legal & Compliance";
    const std::string build = "Construction & Manufacturing";

    c.push_back(form("job_application_university", "Job Application for University Positions", academic, false, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("position", "Position Applied For", "academic_position"),
        description("cover_letter", "Cover Letter", "cover_letter"),
    }));

    c.push_back(form("grant_application", "Grant or Research Funding Application", academic, false, {
        text("project_title", "Project Title", "project_title"),
        text("principal_investigator", "Principal Investigator", "person_name"),
        date("start_date", "Proposed Start Date"),
        binary("prior_funding", "Received Prior Funding?"),
        file("proposal_file", "Proposal Document", "proposal"),
        check("ethics_confirmation", "I confirm the project complies with ethics guidelines"),
    }));

    c.push_back(form("paper_submission", "Paper Submission Form", academic, false, {
        text("paper_title", "Paper Title", "paper_title"),
        text("authors", "Authors", "author_list"),
        text("abstract", "Abstract", "abstract"),
        text("keywords", "Keywords", "keywords"),
        text("contact_email", "Contact Email", "email"),
        dropdown("track", "Submission Track",
                 {"Main Track", "Short Papers", "Demo Track", "Resource Track", "Industry Track"}),
        file("manuscript_file", "Manuscript PDF", "manuscript", /*scored=*/false),
    }));

    c.push_back(form("course_registration", "Student Course Registration Form", academic, false, {
        text("student_name", "Student Name", "person_name"),
        text("student_id", "Student ID", "student_id"),
        text("email", "University Email", "email"),
        text("major", "Major", "major"),
        dropdown("semester", "Semester", {"Spring 2025", "Summer 2025", "Fall 2025", "Spring 2026"}),
        dropdown("year_level", "Year Level", {"Freshman", "Sophomore", "Junior", "Senior", "Graduate"}),
        multiple("courses", "Courses",
                 {"Linear Algebra", "Data Structures", "Microeconomics", "Organic Chemistry", "World History"}),
        description("special_requests", "Special Requests", "special_requests", false),
    }));

    c.push_back(form("scholarship_application", "Scholarship Application for Students", academic, true, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("student_id", "Student ID", "student_id"),
        text("university", "University", "university"),
        text("major", "Major", "major"),
        text("gpa", "Current GPA", "gpa"),
        text("address", "Home Address", "street_address"),
        text("expected_graduation", "Expected Graduation Term", "term"),
        dropdown("degree_level", "Degree Level", {"Associate", "Bachelor", "Master", "Doctorate"}),
        dropdown("scholarship_type", "Scholarship Type", {"Merit", "Need-Based", "Athletic", "Research", "Community Service"}),
        dropdown("citizenship", "Citizenship Status", {"Citizen", "Permanent Resident", "International Student"}),
        description("personal_statement", "Personal Statement", "personal_statement"),
        description("financial_need", "Statement of Financial Need", "financial_need"),
        file("transcript", "Official Transcript", "transcript"),
        file("recommendation_letter", "Recommendation Letter", "recommendation"),
    }));

    c.push_back(form("startup_funding", "Startup Funding Application", business, true, {
        text("company_name", "Company Name", "company"),
        text("founder_name", "Founder Name", "person_name"),
        text("email", "Contact Email", "email"),
        text("phone", "Contact Phone", "phone"),
        text("website", "Company Website", "url"),
        text("headquarters_city", "Headquarters City", "city"),
        text("incorporation_country", "Country of Incorporation", "country"),
        date("founding_date", "Founding Date"),
        dropdown("business_stage", "Business Stage", {"Idea", "Pre-Seed", "Seed", "Series A", "Series B", "Growth"}),
        dropdown("industry", "Industry", {"FinTech", "HealthTech", "EdTech", "CleanTech", "E-Commerce", "Enterprise SaaS"}),
        number("team_size", "Team Size", 1, 500, "integer"),
        number("funding_requested", "Funding Requested (USD)", 10000, 5000000, "integer"),
        number("annual_revenue", "Annual Revenue (USD)", 0, 2000000, "money"),
        description("business_description", "Business Description", "business_description"),
        description("market_opportunity", "Market Opportunity", "market_opportunity"),
        description("use_of_funds", "Use of Funds", "use_of_funds"),
        file("pitch_deck", "Pitch Deck", "pitch_deck"),
        file("financial_statements", "Financial Statements", "financials"),
    }));

    c.push_back(form("rental_application", "Real Estate Rental Application", business, true, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("current_address", "Current Address", "street_address"),
        date("date_of_birth", "Date of Birth"),
        date("move_in_date", "Desired Move-in Date"),
        text("employer", "Current Employer", "company"),
        text("job_title", "Job Title", "job_title"),
        number("monthly_income", "Monthly Income (USD)", 1000, 30000, "money"),
        dropdown("lease_term", "Lease Term", {"6 months", "12 months", "18 months", "24 months"}),
        dropdown("property_type", "Property Type", {"Apartment", "Condo", "Townhouse", "Single-Family Home"}),
        number("occupants", "Number of Occupants", 1, 8, "integer"),
        dropdown("pets", "Pets", {"None", "Cat", "Dog", "Other"}),
        text("previous_landlord", "Previous Landlord", "person_name"),
        text("landlord_phone", "Landlord Phone", "phone"),
        description("reason_for_moving", "Reason for Moving", "reason_for_moving"),
        description("additional_notes", "Additional Notes", "additional_notes", false),
        file("id_document", "Photo ID", "photo_id"),
        file("pay_stub", "Recent Pay Stub", "pay_stub"),
        text("emergency_contact", "Emergency Contact", "person_name"),
        text("emergency_phone", "Emergency Contact Phone", "phone"),
        text("vehicle_plate", "Vehicle License Plate", "license_plate", false),
    }));

    c.push_back(form("workshop_registration", "Educational Workshop Registration", business, true, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("organization", "Organization", "company"),
        text("job_title", "Job Title", "job_title"),
        text("city", "City", "city"),
        text("country", "Country", "country"),
        date("workshop_date", "Workshop Date"),
        dropdown("workshop_track", "Workshop Track",
                 {"Data Analytics", "Project Management", "UX Design", "Cloud Computing", "Leadership"}),
        dropdown("session", "Session", {"Morning", "Afternoon", "Full Day"}),
        dropdown("experience_level", "Experience Level", {"Beginner", "Intermediate", "Advanced"}),
        dropdown("dietary", "Dietary Preference", {"No Preference", "Vegetarian", "Vegan", "Gluten-Free", "Halal"}),
        dropdown("shirt_size", "T-Shirt Size", {"XS", "S", "M", "L", "XL"}),
        description("learning_goals", "Learning Goals", "learning_goals"),
        description("accessibility_needs", "Accessibility Needs", "accessibility_needs", false),
        text("referral_source", "How Did You Hear About Us?", "referral_source"),
        text("emergency_contact", "Emergency Contact", "person_name"),
    }));

    c.push_back(form("association_membership", "Association Membership Application", business, true, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("address", "Street Address", "street_address"),
        text("city", "City", "city"),
        text("postal_code", "Postal Code", "postal_code"),
        text("country", "Country", "country"),
        date("date_of_birth", "Date of Birth"),
        date("membership_start", "Membership Start Date"),
        dropdown("membership_type", "Membership Type", {"Student", "Individual", "Professional", "Corporate", "Lifetime"}),
        text("profession", "Profession", "job_title"),
        text("employer", "Employer", "company"),
        dropdown("experience_band", "Years of Experience", {"0-2 years", "3-5 years", "6-10 years", "11-20 years", "20+ years"}),
        dropdown("payment_method", "Payment Method", {"Credit Card", "Bank Transfer", "PayPal", "Invoice"}),
        description("motivation", "Why Do You Want to Join?", "motivation"),
        description("interests", "Areas of Interest", "interests", false),
        file("profile_photo", "Profile Photo", "photo"),
        file("cv", "Curriculum Vitae", "cv"),
        check("agree_bylaws", "I agree to the association bylaws"),
        check("newsletter_opt_in", "Subscribe me to the member newsletter"),
    }));

    c.push_back(form("art_exhibition", "Art Exhibition Submission Form", arts, true, {
        text("artist_name", "Artist Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("artwork_title", "Artwork Title", "artwork_title"),
        dropdown("medium", "Medium", {"Oil", "Acrylic", "Watercolor", "Photography", "Sculpture", "Digital"}),
        number("artwork_width_cm", "Artwork Width (cm)", 10, 400, "integer"),
        number("price", "Sale Price (USD)", 50, 25000, "money"),
        description("artist_statement", "Artist Statement", "artist_statement"),
        file("artwork_image", "Artwork Image", "artwork_image"),
        text("website", "Portfolio Website", "url"),
        check("originality", "I certify this artwork is my original work"),
    }));

    c.push_back(form("literary_magazine", "Literary Magazine Submission Form", arts, true, {
        text("author_name", "Author Name", "person_name"),
        text("pen_name", "Pen Name", "pen_name", false),
        text("email", "Email Address", "email"),
        text("title", "Submission Title", "literary_title"),
        dropdown("genre", "Genre", {"Fiction", "Poetry", "Creative Nonfiction", "Flash Fiction", "Essay"}),
        dropdown("category", "Submission Category", {"General", "Emerging Writer", "Themed Issue", "Contest Entry"}),
        description("cover_letter", "Cover Letter", "cover_letter"),
        description("author_bio", "Author Bio", "author_bio"),
        file("manuscript", "Manuscript", "manuscript"),
        check("original_work", "This work has not been published elsewhere"),
        text("phone", "Phone Number", "phone"),
    }));

    c.push_back(form("conference_speaker", "Conference Speaker Application Form", arts, true, {
        text("speaker_name", "Speaker Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("organization", "Organization", "company"),
        text("job_title", "Job Title", "job_title"),
        text("talk_title", "Talk Title", "talk_title"),
        dropdown("session_format", "Session Format", {"Keynote", "Talk", "Panel", "Workshop", "Lightning Talk"}),
        dropdown("topic_area", "Topic Area", {"Design", "Technology", "Storytelling", "Music", "Film", "Education"}),
        binary("first_time_speaker", "First-Time Speaker?"),
        description("talk_abstract", "Talk Abstract", "talk_abstract"),
        description("speaker_bio", "Speaker Bio", "speaker_bio"),
        file("headshot", "Headshot", "photo"),
        check("recording_consent", "I consent to my session being recorded"),
        text("linkedin", "LinkedIn Profile", "url"),
    }));

    c.push_back(form("bug_report", "Bug Reporting Form", tech, true, {
        text("reporter_name", "Reporter Name", "person_name"),
        text("email", "Email Address", "email"),
        text("bug_title", "Bug Title", "bug_title"),
        text("product_version", "Product Version", "version"),
        dropdown("severity", "Severity", {"Critical", "Major", "Minor", "Trivial"}),
        dropdown("operating_system", "Operating System", {"Windows 11", "macOS 14", "Ubuntu 22.04", "Android 14", "iOS 17"}),
        description("steps_to_reproduce", "Steps to Reproduce", "steps_to_reproduce"),
        description("expected_behavior", "Expected Behavior", "expected_behavior"),
        file("screenshot", "Screenshot", "screenshot"),
        text("component", "Affected Component", "component"),
    }));

    c.push_back(form("it_support", "IT Support Request Form", tech, true, {
        text("employee_name", "Employee Name", "person_name"),
        text("employee_id", "Employee ID", "employee_id"),
        text("email", "Work Email", "email"),
        text("department", "Department", "department"),
        dropdown("issue_category", "Issue Category", {"Hardware", "Software", "Network", "Account Access", "Email", "Printer"}),
        dropdown("priority", "Priority", {"Low", "Medium", "High", "Urgent"}),
        text("asset_tag", "Asset Tag", "asset_tag"),
        number("affected_users", "Number of Affected Users", 1, 250, "integer"),
        description("issue_description", "Issue Description", "issue_description"),
        file("attachment", "Attachment", "log_file"),
        text("phone_extension", "Phone Extension", "extension"),
    }));

    c.push_back(form("personal_loan", "Personal Loan Application Form", finance, false, {
        text("full_name", "Full Name", "person_name"),
        text("email", "Email Address", "email"),
        text("employer", "Employer", "company"),
        number("loan_amount", "Loan Amount (USD)", 1000, 100000, "integer"),
        number("annual_income", "Annual Income (USD)", 15000, 400000, "money"),
        dropdown("loan_purpose", "Loan Purpose",
                 {"Debt Consolidation", "Home Improvement", "Car Purchase", "Education", "Medical Expenses", "Wedding"}),
        dropdown("loan_term", "Loan Term", {"12 months", "24 months", "36 months", "48 months", "60 months"}),
    }));

    c.push_back(form("bank_account", "Bank Account Opening Form", finance, false, {
        text("full_name", "Full Name", "person_name"),
        date("date_of_birth", "Date of Birth"),
        text("email", "Email Address", "email"),
        dropdown("account_type", "Account Type", {"Checking", "Savings", "Money Market", "Certificate of Deposit"}),
        text("address", "Residential Address", "street_address"),
    }));

    c.push_back(form("financial_planning", "Financial Planning Consultation Form", finance, false, {
        text("client_name", "Client Name", "person_name"),
        text("email", "Email Address", "email"),
        date("consultation_date", "Preferred Consultation Date"),
        dropdown("planning_goal", "Primary Planning Goal",
                 {"Retirement", "Education Savings", "Home Purchase", "Investment Growth", "Debt Reduction"}),
        dropdown("risk_tolerance", "Risk Tolerance", {"Conservative", "Moderate", "Aggressive"}),
        description("financial_situation", "Current Financial Situation", "financial_situation"),
    }));

    c.push_back(form("surgery_consent", "Patient Consent for Surgery", health, false, {
        text("patient_name", "Patient Name", "person_name"),
        date("date_of_birth", "Date of Birth"),
        text("procedure_name", "Procedure", "procedure"),
        text("surgeon_name", "Surgeon", "doctor_name"),
        date("surgery_date", "Scheduled Surgery Date"),
        text("witness_name", "Witness Name", "person_name"),
        check("consent_risks", "I understand the risks of the procedure"),
        check("consent_anesthesia", "I consent to anesthesia"),
    }));

    c.push_back(form("research_study_enrollment", "Medical Research Study Enrollment", health, false, {
        text("participant_name", "Participant Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        number("age", "Age", 18, 90, "integer"),
        dropdown("gender", "Gender", {"Female", "Male", "Non-binary", "Prefer not to say"}),
        dropdown("contact_method", "Preferred Contact Method", {"Email", "Phone", "Text Message", "Mail"}),
        description("medical_history", "Relevant Medical History", "medical_history"),
        number("weight_kg", "Weight (kg)", 40, 160, "decimal"),
    }));

    c.push_back(form("health_insurance_claim", "Health Insurance Claim Form", health, true, {
        text("policyholder_name", "Policyholder Name", "person_name"),
        text("policy_number", "Policy Number", "policy_number"),
        text("email", "Email Address", "email"),
        date("date_of_service", "Date of Service"),
        dropdown("claim_type", "Claim Type", {"Inpatient", "Outpatient", "Dental", "Vision", "Prescription"}),
        text("provider_name", "Healthcare Provider", "provider"),
        description("claim_description", "Claim Description", "claim_description"),
        file("itemized_bill", "Itemized Bill", "bill", /*scored=*/false),
        file("medical_report", "Medical Report", "medical_report", /*scored=*/false),
        text("diagnosis_code", "Diagnosis Code", "diagnosis_code"),
    }));

    c.push_back(form("nda_submission", "NDA Submission Form", legal, false, {
        text("disclosing_party", "Disclosing Party", "company"),
        text("receiving_party", "Receiving Party", "company"),
        date("effective_date", "Effective Date"),
        number("term_months", "Term (months)", 6, 60, "integer"),
        binary("mutual", "Mutual Agreement?"),
        description("purpose", "Purpose of Disclosure", "nda_purpose"),
        text("signatory_name", "Signatory Name", "person_name"),
        text("signatory_title", "Signatory Title", "job_title"),
        check("accept_terms", "I accept the confidentiality terms"),
    }));

    c.push_back(form("background_check", "Background Check Authorization Form", legal, false, {
        text("full_name", "Full Legal Name", "person_name"),
        text("other_names", "Other Names Used", "person_name", false),
        date("date_of_birth", "Date of Birth"),
        text("ssn_last4", "Last 4 Digits of SSN", "ssn_last4"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("current_address", "Current Address", "street_address"),
        text("previous_address", "Previous Address", "street_address", false),
        description("employment_history", "Employment History", "employment_history"),
        check("authorize", "I authorize this background check"),
        date("signature_date", "Signature Date"),
    }));

    c.push_back(form("contractor_onboarding", "Contractor Onboarding Form", legal, true, {
        text("contractor_name", "Contractor Name", "person_name"),
        text("company_name", "Company Name", "company"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("tax_id", "Tax ID", "tax_id"),
        date("start_date", "Contract Start Date"),
        dropdown("contract_type", "Contract Type", {"Fixed Price", "Time and Materials", "Retainer", "Milestone-Based"}),
        dropdown("payment_terms", "Payment Terms", {"Net 15", "Net 30", "Net 45", "Net 60"}),
        description("scope_of_work", "Scope of Work", "scope_of_work"),
        file("insurance_certificate", "Insurance Certificate", "insurance"),
        file("tax_form", "Tax Form", "tax_form"),
        check("code_of_conduct", "I agree to the contractor code of conduct"),
        text("bank_name", "Bank Name", "bank"),
        date("end_date", "Contract End Date"),
    }));

    c.push_back(form("project_bid", "Project Bid Submission Form", build, true, {
        text("company_name", "Company Name", "company"),
        text("contact_name", "Contact Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("project_reference", "Project Reference", "project_reference"),
        number("bid_amount", "Bid Amount (USD)", 50000, 20000000, "money"),
        number("completion_days", "Completion Time (days)", 30, 900, "integer"),
        date("proposed_start", "Proposed Start Date"),
        date("bid_valid_until", "Bid Valid Until"),
        description("methodology", "Construction Methodology", "methodology"),
        description("safety_plan", "Safety Plan", "safety_plan"),
        file("bid_document", "Bid Document", "bid_document"),
        text("license_number", "Contractor License Number", "license_number"),
    }));

    c.push_back(form("manufacturing_order", "Manufacturing Order Form", build, true, {
        text("company_name", "Company Name", "company"),
        text("contact_name", "Contact Name", "person_name"),
        text("email", "Email Address", "email"),
        text("phone", "Phone Number", "phone"),
        text("product_name", "Product Name", "product"),
        text("part_number", "Part Number", "part_number"),
        dropdown("material", "Material", {"Aluminum", "Stainless Steel", "ABS Plastic", "Titanium", "Carbon Fiber"}),
        dropdown("finish", "Surface Finish", {"Anodized", "Powder Coated", "Polished", "Brushed", "Raw"}),
        date("delivery_date", "Requested Delivery Date"),
        dropdown("shipping_method", "Shipping Method", {"Ground", "Air Freight", "Ocean Freight", "Express"}),
        description("special_instructions", "Special Instructions", "special_instructions"),
        file("design_file", "Design File", "cad_file"),
        text("shipping_address", "Shipping Address", "street_address"),
    }));

    // Rotate themes so the catalog exercises every built-in style.
    static const char* kThemes[] = {"plain", "compact", "dark"};
    for (std::size_t i = 0; i < c.size(); ++i) c[i].theme_id = kThemes[i % 3];
    return c;
}

}  // namespace

const std::vector<FormSchema>& builtin_catalog() {
    static const std::vector<FormSchema> catalog = make_catalog();
    return catalog;
}

}  // namespace formgym
