#pragma once

// Word pools for synthetic gold values and context documents.

#include <string>
#include <vector>

namespace formgym::words {

inline const std::vector<std::string> kFirstNames = {
    "Amara", "Benedikt", "Chiara", "Dmitri", "Elena", "Farid", "Greta", "Hiroshi", "Ines", "Jonas",
    "Kavya", "Lukas", "Mariana", "Nikolai", "Olivia", "Pedro", "Quinn", "Rosa", "Samir", "Tamsin",
    "Ulrich", "Valentina", "Wei", "Ximena", "Yusuf", "Zofia", "Anika", "Bruno", "Camille", "Dario",
    "Esther", "Felix", "Ingrid", "Jamal", "Leila", "Mateo", "Nadia", "Oskar", "Priya", "Rafael"};

inline const std::vector<std::string> kLastNames = {
    "Abernathy", "Bergstrom", "Castellano", "Delacroix", "Eriksen",  "Fontaine", "Gallagher", "Hartmann",
    "Ivanova",   "Jablonski", "Kowalczyk",  "Lindqvist", "Moreau",   "Nakamura", "Okafor",    "Petrov",
    "Quintero",  "Rasmussen", "Sandoval",   "Takahashi", "Underwood", "Valdez",  "Whitfield", "Yamamoto",
    "Zielinski", "Achterberg", "Brennan",   "Carvalho",  "Dubois",   "Esposito", "Fischer",   "Gunawardena"};

inline const std::vector<std::string> kCompanyStems = {
    "Northwind", "Bluefield", "Ironbark", "Silverline", "Crescent", "Harborview", "Lumen", "Pinecrest",
    "Redstone",  "Summit",    "Tidewater", "Vertex",    "Willow",   "Aurora",     "Brightpath", "Cobalt"};

inline const std::vector<std::string> kCompanySuffixes = {
    "Labs", "Systems", "Analytics", "Holdings", "Partners", "Dynamics", "Works", "Technologies", "Group"};

inline const std::vector<std::string> kCities = {
    "Lisbon", "Toronto", "Osaka", "Melbourne", "Nairobi", "Valencia", "Gothenburg", "Montreal",
    "Krakow", "Porto", "Edinburgh", "Bogota", "Auckland", "Tallinn", "Seattle", "Ljubljana"};

inline const std::vector<std::string> kCountries = {
    "Portugal", "Canada", "Japan", "Australia", "Kenya", "Spain", "Sweden", "Poland",
    "Scotland", "Colombia", "New Zealand", "Estonia", "United States", "Slovenia", "Germany", "Chile"};

inline const std::vector<std::string> kStreets = {
    "Maple Avenue", "Harbor Street", "Linden Road", "Quarry Lane", "Orchard Way", "Station Road",
    "Elm Crescent", "Riverside Drive", "Chapel Street", "Meadow Close", "Kingfisher Court", "Birch Boulevard"};

inline const std::vector<std::string> kJobTitles = {
    "Data Analyst", "Product Manager", "Civil Engineer", "Research Scientist", "Operations Lead",
    "UX Designer", "Financial Controller", "Software Engineer", "Marketing Coordinator", "Lab Technician",
    "Procurement Officer", "Quality Assurance Specialist"};

inline const std::vector<std::string> kAcademicPositions = {
    "Assistant Professor of Chemistry", "Postdoctoral Researcher in Robotics", "Lecturer in Economics",
    "Research Associate in Genomics", "Associate Professor of Linguistics", "Teaching Fellow in Mathematics",
    "Lab Manager in Neuroscience"};

inline const std::vector<std::string> kMajors = {
    "Computer Science", "Mechanical Engineering", "Biology", "Economics", "Psychology", "Architecture",
    "Applied Mathematics", "Environmental Science", "History", "Chemical Engineering"};

inline const std::vector<std::string> kUniversities = {
    "University of Lisbon", "McGill University", "Kyoto University", "University of Melbourne",
    "Uppsala University", "ETH Zurich", "University of Edinburgh", "Jagiellonian University"};

inline const std::vector<std::string> kDepartments = {
    "Finance", "Human Resources", "Engineering", "Facilities", "Legal", "Marketing", "Research", "Logistics"};

inline const std::vector<std::string> kComponents = {
    "Login Service", "Export Module", "Search Index", "Billing API", "Mobile Sync", "Report Builder",
    "Notification Center", "File Importer"};

inline const std::vector<std::string> kAdjectives = {
    "adaptive", "robust", "scalable", "low-cost", "community-driven", "interpretable", "sustainable",
    "efficient", "collaborative", "resilient", "modular", "lightweight"};

inline const std::vector<std::string> kNouns = {
    "sensor networks", "soil monitoring", "language models", "water filtration", "urban mobility",
    "protein folding", "solar storage", "supply chains", "coral reefs", "public libraries",
    "wildfire detection", "textile recycling"};

inline const std::vector<std::string> kMethods = {
    "Benchmarking", "Rethinking", "Scaling", "Measuring", "Towards", "Learning", "Designing", "Auditing"};

inline const std::vector<std::string> kArtNouns = {
    "Harbor", "Lanterns", "Tide", "Orchard", "Glass", "Meridian", "Embers", "Silence", "Cartography", "Thresholds"};

inline const std::vector<std::string> kArtAdjectives = {
    "Quiet", "Amber", "Northern", "Folded", "Distant", "Hollow", "Borrowed", "Salt", "Paper", "Restless"};

inline const std::vector<std::string> kProducts = {
    "Aluminium Bracket", "Hydraulic Valve", "Steel Flange", "Gear Housing", "Copper Busbar",
    "Polymer Gasket", "Drive Shaft", "Heat Sink"};

inline const std::vector<std::string> kProcedures = {
    "Knee Arthroscopy", "Laparoscopic Cholecystectomy", "Cataract Surgery", "Tonsillectomy",
    "Carpal Tunnel Release", "Hernia Repair"};

inline const std::vector<std::string> kProviders = {
    "Meridian Health Insurance", "Bluecrest Mutual", "Evergreen Assurance", "Harbor Life Cover",
    "Keystone Health Plan"};

inline const std::vector<std::string> kBanks = {
    "First Harbor Bank", "Crescent Savings", "Northwind Credit Union", "Pinecrest Trust", "Summit Federal"};

inline const std::vector<std::string> kReferralSources = {
    "A colleague recommended it", "Conference newsletter", "University mailing list", "Social media post",
    "Search engine", "Industry podcast"};

inline const std::vector<std::string> kTerms = {"Spring", "Summer", "Fall", "Winter"};

inline const std::vector<std::string> kBugVerbs = {
    "crashes when", "hangs after", "shows wrong totals when", "loses data when", "times out when",
    "ignores settings when"};

inline const std::vector<std::string> kBugTriggers = {
    "exporting large files", "switching languages", "uploading images", "resuming from sleep",
    "sorting by date", "opening shared links"};

// Description-field phrases keyed by the topic they describe.
inline const std::vector<std::string> kMotives = {
    "it matches my long-term goals", "I have prepared for this for several years",
    "the work aligns with my recent projects", "it lets me contribute to a growing community",
    "I want to apply what I learned in practice", "it addresses a need I see every day"};

inline const std::vector<std::string> kDetails = {
    "I led a team of four people for two years", "we reduced processing time by a third",
    "I coordinated volunteers across three cities", "the plan has a clear monthly budget",
    "I documented every step in a shared notebook", "our pilot reached two hundred participants",
    "the schedule includes a review after six weeks", "all materials will be shared openly"};

inline const std::vector<std::string> kClosers = {
    "Thank you for considering this request.", "I am happy to provide more details.",
    "Please contact me if anything is unclear.", "I look forward to the next steps.",
    "Further documents are available on request."};

}  // namespace formgym::words
